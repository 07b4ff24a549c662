from __future__ import annotations

import pytest

from leetoric import build_interleaver, certified_code


@pytest.fixture(scope="session")
def code3():
    return certified_code(7, 3)


@pytest.fixture(scope="session")
def code4():
    return certified_code(9, 4)


@pytest.fixture(scope="session")
def imap3(code3):
    return build_interleaver(code3)


@pytest.fixture(scope="session")
def imap4(code4):
    return build_interleaver(code4)
