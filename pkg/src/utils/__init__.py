# Maxwell Quasi-Trefftz Toolkit - Utils Package
# Contains formatting helpers

from .helpers import Helpers

__all__ = ["Helpers"]
