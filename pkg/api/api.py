from fastapi import APIRouter
from api import randic, apex, audits, family, enumeration

api_router = APIRouter()

api_router.include_router(randic.router, prefix="/randic", tags=["randic"])
api_router.include_router(apex.router, prefix="/apex", tags=["apex"])
api_router.include_router(audits.router, prefix="/audits", tags=["audits"])
api_router.include_router(family.router, prefix="/family", tags=["family"])
api_router.include_router(enumeration.router, prefix="/enumeration", tags=["enumeration"])
