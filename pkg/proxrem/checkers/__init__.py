# -*- coding: utf-8 -*-
"""Claim checkers validating constructed graphs."""

from .base import Checker, Subject, ValidationNote, NoteStatus, run_checkers
from .claims import *
