# -*- coding: utf-8 -*-
"""Subcommands of the ``readtransor`` command line."""
