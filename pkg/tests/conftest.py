"""Shared fixtures.

The heavy artifacts (full atlas, exhaustive subset scan) are built once per
session and shared; everything downstream of them is deterministic, so the
sharing cannot leak state between tests.
"""

import time

import pytest

from paratlas import atlas as atlas_mod
from paratlas import construct, scan


@pytest.fixture(scope="session")
def cell24():
    return construct.cell24()


@pytest.fixture(scope="session")
def zonotopal_records():
    return atlas_mod.enumerate_zonotopal()


@pytest.fixture(scope="session")
def scan_with_timing():
    # exhaustive Venkov scan over all 4096 root subsets (a few minutes)
    t0 = time.monotonic()
    result = scan.scan_all_subsets()
    return result, time.monotonic() - t0


@pytest.fixture(scope="session")
def scan_result(scan_with_timing):
    return scan_with_timing[0]


@pytest.fixture(scope="session")
def atlas(zonotopal_records, scan_result):
    sums = atlas_mod.enumerate_sums(scan_result=scan_result)
    return atlas_mod.build_atlas(zonotopal=zonotopal_records, sums=sums)
