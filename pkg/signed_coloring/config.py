import os
from dotenv import load_dotenv

load_dotenv()


class Config:
    LOG_LEVEL = os.getenv("SIGNED_COLORING_LOG_LEVEL", "WARNING").upper()

    # Exact solver refuses larger components at n = Δ unless forced
    SOLVER_EDGE_LIMIT = int(os.getenv("SIGNED_COLORING_SOLVER_EDGE_LIMIT", "64"))

    # Class ratio: maximum m - n + c (log2 of the number of switching classes)
    RATIO_BUDGET = int(os.getenv("SIGNED_COLORING_RATIO_BUDGET", "24"))
    NAIVE_CROSSCHECK_EDGES = int(os.getenv("SIGNED_COLORING_NAIVE_CROSSCHECK_EDGES", "10"))

    # Worker processes for signature sweeps
    JOBS = int(os.getenv("SIGNED_COLORING_JOBS", "1"))
    # Signatures handed to the worker pool at a time
    SWEEP_BATCH = int(os.getenv("SIGNED_COLORING_SWEEP_BATCH", "4096"))

    # Random cactus growth
    CACTUS_CYCLE_PROBABILITY = float(os.getenv("SIGNED_COLORING_CACTUS_CYCLE_PROBABILITY", "0.5"))
    CACTUS_MAX_CYCLE = int(os.getenv("SIGNED_COLORING_CACTUS_MAX_CYCLE", "6"))

    DEFAULT_SEED = int(os.getenv("SIGNED_COLORING_DEFAULT_SEED", "0"))

    # Conjecture probe
    PROBE_TRIALS = int(os.getenv("SIGNED_COLORING_PROBE_TRIALS", "100"))

    EXIT_CODES = {
        "ok": 0,
        "usage": 1,
        "failed": 2,
        "internal": 3,
    }
