from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.middleware.gzip import GZipMiddleware
from core.config import settings
from core.logger import setup_logging
from api.api import api_router

app = FastAPI(
    title=settings.APP_NAME,
    version=settings.VERSION,
    openapi_url=f"{settings.API_V1_STR}/openapi.json"
)

# Los reportes de enumeración y conjetura pueden listar miles de graph6
app.add_middleware(GZipMiddleware, minimum_size=1000)

if settings.DEBUG:
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_credentials=True,
        allow_methods=["*"],
        allow_headers=["*"],
    )

@app.on_event("startup")
async def start_logging():
    setup_logging()

@app.get("/")
async def root():
    return {"message": f"{settings.APP_NAME} {settings.VERSION}: índice de Randić y k-apex trees"}

app.include_router(api_router, prefix=settings.API_V1_STR)
