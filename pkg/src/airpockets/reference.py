"""Embedded reference sequences for cross-checking.

These are the published level-0 counting sequences, stored verbatim and
never extrapolated: anything a command derives beyond index 11 is labeled
oracle-derived, not reference.  The nonzero tail of the air-pocket sequence
(1, 1, 2, 4, 8, 17, 37, 82, 185, 423) is OEIS A004148, embedded here so no
network lookup is ever needed.
"""

# complete Dyck paths with air pockets, by number of steps, n = 0..11
DAP_LEVEL0 = (1, 0, 1, 1, 2, 4, 8, 17, 37, 82, 185, 423)

# complete skew Dyck paths with air pockets, by number of steps, n = 0..11
SKEW_LEVEL0 = (1, 0, 1, 1, 3, 7, 17, 45, 119, 323, 893, 2497)

# OEIS cross-reference for the DAP sequence (documentation only)
OEIS_ID = "A004148"
A004148_PREFIX = (1, 1, 2, 4, 8, 17, 37, 82, 185, 423)

REFERENCE_MAX_INDEX = 11
