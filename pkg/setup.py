# setup.py
# Shim for tools that still call setup.py directly; metadata lives in pyproject.toml.
from setuptools import setup

setup()
