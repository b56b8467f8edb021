import pytest

from uc_spectra.settings import get_settings


@pytest.mark.parametrize(
    "mock_env",
    [{"UC_SPECTRA_MAX_RING_ORDER": "512", "UC_SPECTRA_EIGEN_TOLERANCE": "1e-9"}],
    indirect=True,
)
def test_settings_read_prefixed_environment(mock_env):
    settings = get_settings()
    assert settings.max_ring_order == 512
    assert settings.eigen_tolerance == 1e-9
    assert settings.workers == 2
    assert settings.log_level == "WARNING"


def test_settings_defaults(mock_env):
    settings = get_settings()
    assert settings.max_ring_order == 4096
    assert settings.max_line_edges == 200_000
    assert get_settings() is settings
