"""Set up reductive_geom python module cli scripts."""
from setuptools import setup

from reductive_geom.settings import APP_VERSION

setup(version=APP_VERSION)
