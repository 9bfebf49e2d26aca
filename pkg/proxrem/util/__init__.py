# -*- coding: utf-8 -*-
"""Utility helpers shared across proxrem."""
