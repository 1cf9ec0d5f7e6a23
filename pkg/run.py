#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
ReadTransor - readable ASR transcript toolkit
Entry point for running from a source checkout
"""
import sys

if __name__ == "__main__":
    from app.main import main
    sys.exit(main())
