"""Version of the installed quasiplus distribution."""

from importlib.metadata import PackageNotFoundError, version


def _installed_version(default: str = "0.0.0") -> str:
    """Return the version recorded in the installed metadata, or default."""
    try:
        return version("quasiplus")
    except PackageNotFoundError:  # running from a source tree
        return default


__version__ = _installed_version()

# the release the current version builds on (drops dev/local segments)
__last_version__ = ".".join(__version__.split("dev")[0].split("+")[0].split(".")[:3])
