# Maxwell Quasi-Trefftz Toolkit - Data Layer Package
# Contains computation caches and random rational inputs
# (the JSON codec lives in data.codec and is imported explicitly)

from .cache_manager import CacheManager
from .random_fields import RandomFieldGenerator

__all__ = ["CacheManager", "RandomFieldGenerator"]
