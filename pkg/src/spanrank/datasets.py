"""Bundled example problems.

The school-selection problem is the classic didactic case from Saaty's AHP
book: parents choosing among three high schools against six criteria.  Four
of its seven matrices are inconsistent, which makes it a good exercise for
acceptability analysis while staying small enough to enumerate exactly
(1296 * 3^6 = 944,784 combinations).
"""

from __future__ import annotations

from .pcm import Problem
from .problemio import parse_problem


def school_document() -> dict:
    return {
        "alternatives": ["School A", "School B", "School C"],
        "criteria": [
            "learning",
            "friends",
            "school_life",
            "vocational_training",
            "college_preparation",
            "music_classes",
        ],
        "matrices": {
            "learning": [
                [1, "1/3", "1/2"],
                [3, 1, 3],
                [2, "1/3", 1],
            ],
            "friends": [
                [1, 1, 1],
                [1, 1, 1],
                [1, 1, 1],
            ],
            "school_life": [
                [1, 5, 1],
                ["1/5", 1, "1/5"],
                [1, 5, 1],
            ],
            "vocational_training": [
                [1, 9, 7],
                ["1/9", 1, "1/5"],
                ["1/7", 5, 1],
            ],
            "college_preparation": [
                [1, "1/2", 1],
                [2, 1, 2],
                [1, "1/2", 1],
            ],
            "music_classes": [
                [1, 6, 4],
                ["1/6", 1, "1/3"],
                ["1/4", 3, 1],
            ],
        },
        "weights": [
            [1, 4, 3, 1, 3, 4],
            ["1/4", 1, 7, 3, "1/5", 1],
            ["1/3", "1/7", 1, "1/5", "1/5", "1/6"],
            [1, "1/3", 5, 1, 1, "1/3"],
            ["1/3", 5, 5, 1, 1, 3],
            ["1/4", 1, 6, 3, "1/3", 1],
        ],
    }


def school_problem() -> Problem:
    return parse_problem(school_document())
