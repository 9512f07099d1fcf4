# Persistence helpers
from .table_cache import Family, TableCache

__all__ = ['Family', 'TableCache']
