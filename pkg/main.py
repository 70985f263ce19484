"""
HTTP surface of torsionlab: curve analysis and exponent tables.

    uvicorn main:app --reload

@Time ： 2026-10-18
"""
from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from api import router as api_router
from utils.settings import VERSION

app = FastAPI(title="torsionlab", version=VERSION)

# CORS configuration
origins = [
    "http://localhost:3000",
    "http://localhost:8888",
]

app.add_middleware(
    CORSMiddleware,
    allow_origins=origins,
    allow_credentials=True,
    allow_methods=["GET", "POST"],
    allow_headers=["*"],
)

# Register API routes with "/api" prefix
app.include_router(api_router, prefix="/api")


@app.get("/")
async def root():
    return {"message": "torsionlab API", "version": VERSION}
