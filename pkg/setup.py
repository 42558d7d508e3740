#!/usr/bin/env python3
# ==============================================================================
# frobkit - setuptools manifest
# Version: 3.0.0
#
# Description:
# Packages the frobkit modules (flat layout at the repository root) and the
# `frobkit` console command.
#
# Changelog (v3.0.0):
# - REFACTOR: The interactive service installer is replaced by a plain
#   setuptools manifest; the toolkit runs as a command, not a service.
# - FEAT: Runtime dependencies sympy and psutil; 'test' extra with pytest and
#   hypothesis.
# ==============================================================================

from setuptools import setup

MODULES = [
    "errors",
    "prime_field",
    "monomial_order",
    "poly_ring",
    "polynomial",
    "poly_text",
    "groebner",
    "ideal_ops",
    "determinantal",
    "linkage",
    "fcriteria",
    "config_loader",
    "report_archive",
    "cli",
]

setup(
    name="frobkit",
    version="1.3.0",
    description="Exact Groebner-basis certificates for F-purity and strong F-regularity over F_p.",
    py_modules=MODULES,
    python_requires=">=3.8",
    install_requires=[
        "sympy>=1.9",
        "psutil>=5.8",
    ],
    extras_require={
        "test": ["pytest>=7.0", "hypothesis>=6.0"],
    },
    entry_points={
        "console_scripts": ["frobkit = cli:main"],
    },
)
