"""Shared test configuration: exact arithmetic is slow, so no deadlines."""

from hypothesis import settings

settings.register_profile("exact", deadline=None)
settings.load_profile("exact")
