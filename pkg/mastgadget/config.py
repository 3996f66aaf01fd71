"""
Configuration management module
"""

import logging
import os
import psutil
from dotenv import load_dotenv
from pydantic import BaseModel, Field, PositiveInt, ValidationError as PydanticValidationError

load_dotenv()


class CapSettings(BaseModel):
    """Typed view of the numeric settings"""
    is_cap: PositiveInt
    pis_cap: PositiveInt
    mast_cap: PositiveInt
    mct_cap: PositiveInt
    enum_limit: PositiveInt
    subset_cap: PositiveInt
    workers: int = Field(ge=0)
    parallel_min_leaves: PositiveInt
    verify_min_vertices: PositiveInt
    verify_max_vertices: PositiveInt


class Config:
    """Application configuration"""

    LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO').upper()
    LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

    # Brute-force caps
    IS_CAP = os.getenv('IS_CAP', 24)
    PIS_CAP = os.getenv('PIS_CAP', 10_000_000)
    MAST_CAP = os.getenv('MAST_CAP', 20)
    MCT_CAP = os.getenv('MCT_CAP', 18)
    ENUM_LIMIT = os.getenv('ENUM_LIMIT', 6)
    # Leaf subsets scanned by the size-q decision oracles
    SUBSET_CAP = os.getenv('SUBSET_CAP', 2_000_000)

    # Parallel subset scans; 0 means one worker per physical core
    WORKERS = os.getenv('WORKERS', 1)
    PARALLEL_MIN_LEAVES = os.getenv('PARALLEL_MIN_LEAVES', 14)

    # Random graphs drawn by `verify --samples`
    VERIFY_MIN_VERTICES = os.getenv('VERIFY_MIN_VERTICES', 3)
    VERIFY_MAX_VERTICES = os.getenv('VERIFY_MAX_VERTICES', 6)

    @classmethod
    def validate(cls):
        """Validate numeric settings and store them as integers"""
        try:
            settings = CapSettings(
                is_cap=cls.IS_CAP,
                pis_cap=cls.PIS_CAP,
                mast_cap=cls.MAST_CAP,
                mct_cap=cls.MCT_CAP,
                enum_limit=cls.ENUM_LIMIT,
                subset_cap=cls.SUBSET_CAP,
                workers=cls.WORKERS,
                parallel_min_leaves=cls.PARALLEL_MIN_LEAVES,
                verify_min_vertices=cls.VERIFY_MIN_VERTICES,
                verify_max_vertices=cls.VERIFY_MAX_VERTICES,
            )
        except PydanticValidationError as e:
            raise ValueError(f"Invalid configuration: {e}") from e

        if settings.verify_min_vertices > settings.verify_max_vertices:
            raise ValueError("VERIFY_MIN_VERTICES must not exceed VERIFY_MAX_VERTICES")

        for name, value in settings.model_dump().items():
            setattr(cls, name.upper(), value)
        return True

    @classmethod
    def worker_count(cls) -> int:
        if cls.WORKERS == 0:
            return psutil.cpu_count(logical=False) or 1
        return cls.WORKERS


config = Config()

try:
    Config.validate()
except ValueError as e:
    # app.main reports it and exits with the usage status
    logging.getLogger(__name__).warning(f"Configuration not applied: {e}")
