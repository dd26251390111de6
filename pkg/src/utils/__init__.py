from .random import SplitMix64
from .utils import create_dir, join_path, read_text, write_bytes

__all__ = ["join_path", "create_dir", "read_text", "write_bytes", "SplitMix64"]
