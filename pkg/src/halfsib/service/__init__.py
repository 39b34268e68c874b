"""HTTP service wrapper: pydantic request/response schemas, handler
functions shared with the CLI, and the FastAPI application."""
