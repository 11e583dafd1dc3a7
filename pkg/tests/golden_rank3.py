"""Rank-3 class listings, transcribed row by row.

Each entry is (section, row number, set spec) with set specs in the CLI
grammar.  Rows are kept exactly as printed, defects included; the tests
name the defective rows explicitly.
"""
from __future__ import annotations

A3 = [
    ('special', 1, 'a1,a2,a3,a1+a2,a2+a3,a1+a2+a3'),
    ('special', 2, 'a2,a3,a1+a2,a2+a3,a1+a2+a3'),
    ('special', 3, 'a1,a2,a1+a2,a2+a3,a1+a2+a3'),
    ('special', 4, 'a1,a3,a1+a2,a2+a3,a1+a2+a3'),
    ('special', 5, 'a3,a1+a2,a2+a3,a1+a2+a3'),
    ('special', 6, 'a1,a1+a2,a2+a3,a1+a2+a3'),
    ('special', 7, 'a2,a1+a2,a2+a3,a1+a2+a3'),
    ('special', 8, 'a3,a1+a2,a1+a2+a3'),
    ('special', 9, 'a1+a2,a2+a3,a1+a2+a3'),
    ('special', 10, 'a3,a2+a3,a1+a2+a3'),
    ('special', 11, 'a1,a1+a2,a1+a2+a3'),
    ('special', 12, 'a1+a2,a2+a3'),
    ('special', 13, 'a1+a2,a1+a2+a3'),
    ('special', 14, 'a3,a1+a2+a3'),
    ('special', 15, 'a3'),
    ('mixed', 16, 'a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,-a1'),
    ('mixed', 17, 'a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,-a3'),
    ('mixed', 18, 'a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,-a2'),
    ('mixed', 19, 'a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,-a1,-a3'),
    ('mixed', 20, 'a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,-a1,-a2,-a1-a2'),
    ('mixed', 21, 'a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,-a2,-a3,-a2-a3'),
    ('mixed', 22, 'a2,a3,a1+a2,a2+a3,a1+a2+a3,-a3'),
    ('mixed', 23, 'a1,a2,a1+a2,a2+a3,a1+a2+a3,-a1'),
    ('mixed', 24, 'a1,a3,a2+a3,a1+a2+a3,-a1'),
    ('mixed', 25, 'a1,a2,a1+a2,a1+a2+a3,-a2'),
    ('mixed', 26, 'a1+a2,a2+a3,-a1-a2'),
    ('mixed', 27, 'a3,a1+a2,a1+a2+a3,-a3'),
    ('mixed', 28, 'a3,a1+a2,a1+a2+a3,-a1-a2'),
    ('symmetric', 29, 'a1,-a1'),
    ('symmetric', 30, 'a1,a2,a1+a2,-a1,-a2,-a1-a2'),
    ('symmetric', 31, 'a1,a3,-a1,-a3'),
    ('symmetric', 32, 'all'),
]

B3 = [
    ('special', 1, 'positive'),
    ('special', 2, 'a1,a2,a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3'),
    ('special', 3, 'a2,a3,a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3'),
    ('special', 4, 'a1,a3,a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3'),
    ('special', 5, 'a1,a2,a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3'),
    ('special', 6, 'a3,a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3'),
    ('special', 7, 'a1,a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3'),
    ('special', 8, 'a2,a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3'),
    ('special', 9, 'a1,a2,a1+a2,a2+2a3,a1+a2+2a3,a1+2a2+2a3'),
    ('special', 10, 'a3,a1+a2,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3'),
    ('special', 11, 'a1,a1+a2,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3'),
    ('special', 12, 'a1,a1+a2,a2+a3,a1+a2+a3,a1+a2+2a3,a1+2a2+2a3'),
    ('special', 13, 'a2,a1+a2,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3'),
    ('special', 14, 'a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3'),
    ('special', 15, 'a3,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3'),
    ('special', 16, 'a1,a1+a2,a2+2a3,a1+a2+2a3,a1+2a2+2a3'),
    ('special', 17, 'a3,a1+a2,a1+a2+a3,a1+a2+2a3,a1+2a2+2a3'),
    ('special', 18, 'a2,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3'),
    ('special', 19, 'a2,a1+a2,a2+2a3,a1+a2+2a3,a1+2a2+2a3'),
    ('special', 20, 'a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+2a2+2a3'),
    ('special', 21, 'a1+a2,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3'),
    ('special', 22, 'a1+a2,a2+a3,a1+a2+a3,a1+a2+2a3,a1+2a2+2a3'),
    ('special', 23, 'a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3'),
    ('special', 24, 'a3,a1+a2,a1+a2+a3,a1+a2+2a3'),
    ('special', 25, 'a2,a1+a2+a3,a1+a2+2a3,a1+2a2+2a3'),
    ('special', 26, 'a1+a2,a2+2a3,a1+a2+2a3,a1+2a2+2a3'),
    ('special', 27, 'a2,a1+a2+a3,a2+2a3,a1+2a2+2a3'),
    ('special', 27, 'a3,a1+a2+a3,a1+a2+2a3,a1+2a2+2a3'),
    ('special', 29, 'a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3'),
    ('special', 30, 'a1,a1+a2,a1+a2+a3,a1+a2+2a3,a1+2a2+2a3'),
    ('special', 31, 'a1+a2,a1+a2+a3,a1+a2+2a3,a1+2a2+2a3'),
    ('special', 32, 'a2,a1+a2+2a3,a1+2a2+2a3'),
    ('special', 33, 'a2,a1+a2+a3,a2+2a3'),
    ('special', 34, 'a3,a1+a2+a3,a1+a2+2a3'),
    ('special', 35, 'a2,a1+a2+a3,a1+2a2+2a3'),
    ('special', 36, 'a1+a2,a1+a2+a3,a1+a2+2a3'),
    ('special', 37, 'a1+a2,a1+a2+2a3,a1+2a2+2a3'),
    ('special', 38, 'a1+a2+a3,a1+a2+2a3,a1+2a2+2a3'),
    ('special', 39, 'a2+2a3,a1+a2+2a3,a1+2a2+2a3'),
    ('special', 40, 'a1+a2+a3,a2+2a3'),
    ('special', 41, 'a2,a2+2a3'),
    ('special', 42, 'a1+a2+a3,a1+a2+2a3'),
    ('special', 43, 'a1+a2+2a3,a1+2a2+2a3'),
    ('special', 44, 'a1+a2+a3'),
    ('special', 45, 'a2+2a3'),
    ('special', 46, 'a1,a1+a2,a1+a2+2a3,a1+2a2+2a3,-a2'),
    ('mixed', 47, 'a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a3'),
    ('mixed', 48, 'a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a1'),
    ('mixed', 49, 'a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a2'),
    ('mixed', 50, 'a1,a2,a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a1'),
    ('mixed', 51, 'a2,a3,a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a3'),
    ('mixed', 52, 'a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a1,-a3'),
    ('mixed', 53, 'a1,a2,a1+a2,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a2'),
    ('mixed', 54, 'a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a1,-a2,-a1-a2'),
    ('mixed', 55, 'a1,a3,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a1'),
    ('mixed', 56, 'a1,a2,a1+a2,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a2'),
    ('mixed', 57, 'a1,a2,a1+a2,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a1'),
    ('mixed', 58, 'a3,a1+a2,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a1-a2'),
    ('mixed', 59, 'a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a2,-a3,-a2-a3,-a2-2a3'),
    ('mixed', 60, 'a1,a2,a1+a2,a1+a2+a3,a1+a2+2a3,a1+2a2+2a3,-a2'),
    ('mixed', 61, 'a1,a3,a1+a2,a1+a2+a3,a1+a2+2a3,a1+2a2+2a3,-a3'),
    ('mixed', 62, 'a1,a2,a1+a2,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a2,-a2-2a3'),
    ('mixed', 63, 'a2,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a2'),
    ('mixed', 64, 'a1,a2,a1+a2,a1+a2+2a3,a1+2a2+2a3,-a2'),
    ('mixed', 65, 'a1,a2,a1+a2,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a2,-a2-2a3'),
    ('mixed', 66, 'a3,a1+a2,a1+a2+a3,a1+a2+2a3,a1+2a2+2a3,-a3'),
    ('mixed', 67, 'a3,a1+a2,a1+a2+a3,a1+a2+2a3,-a1-a2'),
    ('mixed', 68, 'a3,a1+a2,a1+a2+a3,a1+a2+2a3,-a3'),
    ('mixed', 69, 'a2,a1+a2+a3,a1+a2+2a3,a1+2a2+2a3,-a2'),
    ('mixed', 70, 'a1,a2,a1+a2,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a1,-a2,-a1-a2'),
    ('mixed', 71, 'a1,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a1'),
    ('mixed', 72, 'a2,a1+a2+a3,a2+2a3,-a2'),
    ('mixed', 73, 'a2,a1+a2+a3,a2+2a3,-a1-a2-a3'),
    ('mixed', 74, 'a2,a1+a2+2a3,a1+2a2+2a3,-a2'),
    ('mixed', 75, 'a2,a1+a2+a3,-a2'),
    ('mixed', 76, 'a2,a1+a2+a3,a2+2a3,-a2,-a2-2a3'),
    ('mixed', 77, 'a2,a2+2a3,-a2'),
    ('mixed', 78, 'a1+a2+a3,a2+2a3,-a1-a2-a3'),
    ('mixed', 79, 'a2,a1+a2+a3,a2+2a3,-a2,-a1-a2-a3'),
    ('symmetric', 80, 'a1,-a1'),
    ('symmetric', 81, 'a3,-a3'),
    ('symmetric', 82, 'a1,a3,-a1,-a3'),
    ('symmetric', 83, 'a1,a1+2a2+2a3,-a1,-a1-2a2-2a3'),
    ('symmetric', 84, 'a1,a2,a1+a2,-a1,-a2,-a1-a2'),
    ('symmetric', 85, 'a1,a2+a3,a1+a2+a3,a1+2a2+2a3,-a1,-a2-a3,-a1-a2-a3,-a1-2a2-2a3'),
    ('symmetric', 86, 'a1,a3,a1+2a2+2a3,-a1,-a3,-a1-2a2-2a3'),
    ('symmetric', 87, 'a1,a2,a1+a2,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a1,-a2,-a1-a2,-a2-2a3,-a1-a2-2a3,-a1-2a2-2a3'),
    ('symmetric', 88, 'all'),
]

C3 = [
    ('special', 1, 'positive'),
    ('special', 2, 'a2,a3,a1+a2,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3'),
    ('special', 3, 'a1,a2,a1+a2,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3'),
    ('special', 4, 'a1,a3,a1+a2,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3'),
    ('special', 5, 'a3,a1+a2,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3'),
    ('special', 6, 'a1,a1+a2,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3'),
    ('special', 7, 'a1,a3,a1+a2,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3'),
    ('special', 8, 'a2,a1+a2,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3'),
    ('special', 9, 'a3,a1+a2,a2+a3,a1+a2+a3,a1+2a2+a3,2a1+2a2+a3'),
    ('special', 10, 'a3,a1+a2,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3'),
    ('special', 11, 'a1,a1+a2,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3'),
    ('special', 12, 'a1,a1+a2,a2+a3,a1+a2+a3,a1+2a2+a3,2a1+2a2+a3'),
    ('special', 13, 'a1+a2,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3'),
    ('special', 14, 'a3,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3'),
    ('special', 15, 'a3,a1+a2,a1+a2+a3,2a2+a3,2a1+2a2+a3'),
    ('special', 16, 'a3,a1+a2,a1+a2+a3,a1+2a2+a3,2a1+2a2+a3'),
    ('special', 17, 'a1+a2,a2+a3,a1+a2+a3,a1+2a2+a3,2a1+2a2+a3'),
    ('special', 18, 'a1+a2,a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3'),
    ('special', 19, 'a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3'),
    ('special', 20, 'a1+a2,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3'),
    ('special', 21, 'a3,a2+a3,a1+a2+a3,a1+2a2+a3,2a1+2a2+a3'),
    ('special', 22, 'a1,a1+a2,a1+a2+a3,a1+2a2+a3,2a1+2a2+a3'),
    ('special', 23, 'a3,a1+a2,a1+a2+a3,2a1+2a2+a3'),
    ('special', 24, 'a1+a2,a2+a3,a1+2a2+a3,2a1+2a2+a3'),
    ('special', 25, 'a1+a2,a1+a2+a3,2a2+a3,2a1+2a2+a3'),
    ('special', 26, 'a3,a1+a2+a3,2a2+a3,2a1+2a2+a3'),
    ('special', 27, 'a3,a1+a2+a3,2a2+a3,a1+2a2+a3'),
    ('special', 28, 'a3,a1+a2+a3,a1+2a2+a3,2a1+2a2+a3'),
    ('special', 29, 'a2+a3,a1+a2+a3,a1+2a2+a3,2a1+2a2+a3'),
    ('special', 30, 'a1+a2,a1+a2+a3,a1+2a2+a3,2a1+2a2+a3'),
    ('special', 31, 'a1+a2,a2+a3,a1+2a2+a3'),
    ('special', 32, 'a3,2a2+a3,2a1+2a2+a3'),
    ('special', 33, 'a1+a2+a3,2a2+a3,2a1+2a2+a3'),
    ('special', 34, 'a2+a3,a1+2a2+a3,2a1+2a2+a3'),
    ('special', 35, 'a1+a2,a1+a2+a3,2a1+2a2+a3'),
    ('special', 36, 'a3,a1+a2+a3,2a1+2a2+a3'),
    ('special', 37, 'a2+a3,a1+a2+a3,a1+2a2+a3'),
    ('special', 38, 'a1+a2,a1+2a2+a3,2a1+2a2+a3'),
    ('special', 39, 'a1+a2+a3,2a2+a3'),
    ('special', 40, '2a2+a3,2a1+2a2+a3'),
    ('special', 41, 'a2+a3,a1+2a2+a3'),
    ('special', 42, 'a1+a2+a3,2a1+2a2+a3'),
    ('special', 43, 'a1+a2+a3'),
    ('special', 44, '2a2+a3'),
    ('mixed', 45, 'a3,a1+a2,a1+a2+a3,2a1+2a2+a3,-a3'),
    ('mixed', 46, 'a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3,-a1'),
    ('mixed', 47, 'a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3,-a3'),
    ('mixed', 48, 'a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3,-a2'),
    ('mixed', 49, 'a1,a2,a1+a2,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3,-a1'),
    ('mixed', 50, 'a2,a3,a1+a2,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3,-a3'),
    ('mixed', 51, 'a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3,-a1,-a3'),
    ('mixed', 52, 'a1,a3,a1+a2,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3,-a3'),
    ('mixed', 53, 'a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3,-a1,-a2,-a1-a2'),
    ('mixed', 54, 'a1,a3,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3,-a1'),
    ('mixed', 55, 'a3,a1+a2,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3,-a3'),
    ('mixed', 56, 'a3,a1+a2,a2+a3,a1+a2+a3,a1+2a2+a3,2a1+2a2+a3,-a1-a2'),
    ('mixed', 57, 'a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3,-a2,-a3,-a2-a3,-2a2-a3'),
    ('mixed', 58, 'a1,a3,a1+a2,a1+a2+a3,a1+2a2+a3,2a1+2a2+a3,-a3'),
    ('mixed', 59, 'a1,a2,a1+a2,a1+a2+a3,a1+2a2+a3,2a1+2a2+a3,-a2'),
    ('mixed', 60, 'a1,a3,a1+a2,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3,-a3,-2a2-a3'),
    ('mixed', 61, 'a3,a1+a2,a1+a2+a3,2a2+a3,2a1+2a2+a3,-2a2-a3'),
    ('mixed', 62, 'a3,a1+a2,a1+a2+a3,2a2+a3,2a1+2a2+a3,-a3'),
    ('mixed', 63, 'a3,a1+a2,a1+a2+a3,2a2+a3,2a1+2a2+a3,-a1-a2'),
    ('mixed', 64, 'a3,a1+a2,a1+a2+a3,a1+2a2+a3,2a1+2a2+a3,-a3'),
    ('mixed', 65, 'a1+a2,a1+a2+a3,2a2+a3,2a1+2a2+a3,-2a2-a3'),
    ('mixed', 66, 'a3,a1+a2,a1+a2+a3,2a2+a3,2a1+2a2+a3,-a3,-2a2-a3'),
    ('mixed', 67, 'a3,a1+a2,a1+a2+a3,2a1+2a2+a3,-a1-a2'),
    ('mixed', 68, 'a3,a1+a2+a3,2a2+a3,2a1+2a2+a3,-2a2-a3'),
    ('mixed', 69, 'a3,a1+a2,a1+a2+a3,2a2+a3,2a1+2a2+a3,-a1-a2,-2a2-a3'),
    ('mixed', 70, 'a1+a2,a2+a3,a1+2a2+a3,2a1+2a2+a3,-a2-a3'),
    ('mixed', 71, 'a3,2a2+a3,2a1+2a2+a3,-a3'),
    ('mixed', 72, 'a1+a2,a2+a3,a1+2a2+a3,-a1-a2'),
    ('mixed', 73, 'a1+a2+a3,2a2+a3,2a1+2a2+a3,-2a2-a3'),
    ('mixed', 74, 'a1+a2+a3,2a2+a3,-2a2-a3'),
    ('mixed', 75, 'a3,a1+a2,a1+a2+a3,2a2+a3,2a1+2a2+a3,-a3,-a1-a2,-a1-a2-a3,-2a1-2a2-a3'),
    ('mixed', 76, 'a3,2a2+a3,-a3'),
    ('mixed', 77, 'a1+a2,2a2+a3,-a1-a2'),
    ('mixed', 78, 'a3,2a2+a3,2a1+2a2+a3,-a3,-2a1-2a2-a3'),
    ('symmetric', 79, 'a1,-a1'),
    ('symmetric', 80, 'a3,-a3'),
    ('symmetric', 81, 'a1,a3,-a1,-a3'),
    ('symmetric', 82, 'a3,2a2+a3,-a3,-2a2-a3'),
    ('symmetric', 83, 'a1,a2,a1+a2,-a1,-a2,-a1-a2'),
    ('symmetric', 84, 'a1,2a2+a3,a1+2a2+a3,2a1+2a2+a3,-a1,-2a2-a3,-a1-2a2-a3,-2a1-2a2-a3'),
    ('symmetric', 85, 'a3,2a2+a3,2a1+2a2+a3,-a3,-2a2-a3,-2a1-2a2-a3'),
    ('symmetric', 86, 'a1,a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3,-a1,-a3,-2a2-a3,-a1-2a2-a3,-2a1-2a2-a3'),
    ('symmetric', 87, 'all'),
]

TABLES = {"A3": A3, "B3": B3, "C3": C3}

# Rows that duplicate another class, keyed by (type, row), mapped to the
# class the row should have listed.  Derived from our own classification,
# not transcribed: each is the unique class missing once the duplicate is
# dropped.
CORRECTIONS = {
    ("B3", 5): "a1,a2,a1+a2,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3",
    ("B3", 46): "a1,a1+a2,a1+a2+2a3,a1+2a2+2a3",
    ("C3", 7): "a1,a3,a1+a2,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3",
}
