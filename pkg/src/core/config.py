import os
from dotenv import load_dotenv
from pydantic import BaseModel

load_dotenv()


class Settings(BaseModel):
    field: str = os.getenv("HRR_FIELD", "Q")
    max_loewy_length: int = int(os.getenv("HRR_MAX_LOEWY_LENGTH", "64"))
    max_path_count: int = int(os.getenv("HRR_MAX_PATH_COUNT", "20000"))
    max_resolution_length: int = int(os.getenv("HRR_MAX_RESOLUTION_LENGTH", "32"))
    seed: int = int(os.getenv("HRR_SEED", "7"))
    samples: int = int(os.getenv("HRR_SAMPLES", "100"))
    worker_batch_size: int = int(os.getenv("HRR_WORKER_BATCH_SIZE", "8"))
    construction_cache_size: int = int(os.getenv("HRR_CONSTRUCTION_CACHE_SIZE", "64"))
    log_level: str = os.getenv("HRR_LOG_LEVEL", "WARNING")


settings = Settings()
