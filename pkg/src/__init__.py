# Maxwell Quasi-Trefftz Toolkit - Main Package
# This file makes src a Python package

__version__ = "0.1.0"
__author__ = "Quasi-Trefftz Toolkit Team"
