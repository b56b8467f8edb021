from typing import Generator

import pytest
from loguru import logger


@pytest.fixture(autouse=True)
def reset_logging() -> Generator[None, None, None]:
    """main() points loguru at the stderr of the test that called it; put the library
    back to silent afterwards so later tests do not write into a closed capture."""
    yield
    logger.remove()
    logger.disable("uc_spectra")
