# -*- coding: utf-8 -*-
"""ReadTransor package metadata."""
