"""Exact twisted bar constructions of finite twisted monoids."""

from ._twistbar import *  # noqa: F401,F403
from ._twistbar import __doc__  # noqa: F401
