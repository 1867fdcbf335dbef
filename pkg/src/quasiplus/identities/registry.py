"""
The named identities of trimedial quasigroup theory.

The registry is hard-coded; each entry prints back to exactly the text
stored here.
"""
from types import MappingProxyType as MapProxy
from typing import Dict, Iterable, List, Union

from quasiplus.constants import IDENTITY_KEYS
from quasiplus.exceptions import IdentitySyntaxError, UnknownIdentityError
from quasiplus.identities.parse import parse_identity
from quasiplus.identities.term import Identity
from quasiplus.utils.docs import compose_docstring, format_mapping

IDENTITY_TEXT = MapProxy(
    {
        # medial
        "M": "(x*y)*(u*v) = (x*u)*(y*v)",
        # left and right semimedial
        "Sl": "(x*x)*(y*z) = (x*y)*(x*z)",
        "Sr": "(z*y)*(x*x) = (z*x)*(y*x)",
        # left and right F-quasigroup
        "Fl": "x*(y*z) = (x*y)*((x\\x)*z)",
        "Fr": "(z*y)*x = (z*(x/x))*(y*x)",
        # the E-laws
        "El": "x*(y*z) = ((x/x)*y)*(x*z)",
        "Er": "(z*y)*x = (z*x)*(y*(x\\x))",
        # Kepka's identity; with Sr it axiomatizes trimedial quasigroups
        "K": "(x*(x*x))*(u*v) = (x*u)*((x*x)*v)",
    }
)

assert tuple(IDENTITY_TEXT) == IDENTITY_KEYS

NAMED_IDENTITIES: Dict[str, Identity] = MapProxy(
    {key: parse_identity(text) for key, text in IDENTITY_TEXT.items()}
)

identity_like = Union[str, Identity]


@compose_docstring(registry=format_mapping(IDENTITY_TEXT))
def get_identity(value: identity_like) -> Identity:
    """
    Return a registry identity by key, parse identity text, or pass through.

    The registry holds:
        {registry}

    Raises
    ------
    UnknownIdentityError if value is neither a key nor parseable text.
    """
    if isinstance(value, Identity):
        return value
    key = value.strip()
    if key in NAMED_IDENTITIES:
        return NAMED_IDENTITIES[key]
    if "=" not in key:
        msg = f"{value!r} is not one of {', '.join(IDENTITY_KEYS)} or identity text"
        raise UnknownIdentityError(msg)
    try:
        return parse_identity(key)
    except IdentitySyntaxError as e:
        raise UnknownIdentityError(f"{value!r} could not be parsed: {e}")


def get_identities(values: Iterable[identity_like]) -> List[Identity]:
    """Apply get_identity to each value."""
    return [get_identity(x) for x in values]


def identity_label(value: identity_like) -> str:
    """A short label: the registry key when there is one, else the text."""
    if isinstance(value, str) and value.strip() in NAMED_IDENTITIES:
        return value.strip()
    identity = get_identity(value)
    for key, named in NAMED_IDENTITIES.items():
        if named == identity:
            return key
    return str(identity)
