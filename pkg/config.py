import os

try:
    from dotenv import load_dotenv
except ImportError:
    load_dotenv = None


class UnionFreeConfig:
    MAX_GROUND = 64             # one machine word per subset
    CLOSURE_CAP = 1 << 20       # |U(F)| ceiling for union_closure
    AUGMENT_STATE_CAP = 1 << 20 # visited-set ceiling for can_augment
    ENUMERATE_MAX_N = 20        # enumerate_chain_specs yields 2^(n-1) chains
    MAXIMAL_MAX_N = 24          # maximality scans all 2^n - 1 candidates

    EXACT_MAX_N = 16
    EXHAUSTIVE_MAX_N = 4
    MAX_WORKERS = 4
    TIMEOUT_CHECK_EVERY = 4096  # search nodes between deadline checks

    MINUTES_PER_YEAR = 525960   # 365.25 days

    SHOW_PROGRESS = False
    LOG_LEVEL = "WARNING"

    @classmethod
    def from_env(cls):
        if load_dotenv is not None:
            load_dotenv()

        cls.MAX_WORKERS = int(os.getenv("UNIONFREE_MAX_WORKERS", cls.MAX_WORKERS))
        cls.CLOSURE_CAP = int(os.getenv("UNIONFREE_CLOSURE_CAP", cls.CLOSURE_CAP))
        cls.AUGMENT_STATE_CAP = int(os.getenv("UNIONFREE_AUGMENT_STATE_CAP", cls.AUGMENT_STATE_CAP))
        cls.LOG_LEVEL = os.getenv("UNIONFREE_LOG_LEVEL", cls.LOG_LEVEL).upper()
        show = os.getenv("UNIONFREE_SHOW_PROGRESS")
        if show is not None:
            cls.SHOW_PROGRESS = show.strip().lower() in ("1", "true", "yes", "on")
        return cls
