"""
Utilities for composing docstrings.
"""
import textwrap
from typing import Mapping, Sequence, Union


def compose_docstring(**kwargs: Union[str, Sequence[str]]):
    """
    Decorator for composing docstrings.

    Keys found in curly brackets in the wrapped function's docstring are
    replaced by the provided values, indented to match the line they
    appear on. Values may be strings or sequences of lines.

    Examples
    --------
    >>> @compose_docstring(workers_doc="workers\\n    Number of processes.")
    ... def example_function(workers=1):
    ...     '''
    ...     Do something.
    ...
    ...     Parameters
    ...     ----------
    ...     {workers_doc}
    ...     '''
    >>> assert "Number of processes." in example_function.__doc__
    """

    def _wrap(func):
        docstring = func.__doc__
        for key, value in kwargs.items():
            value = value if isinstance(value, str) else "\n".join(value)
            value = value.lstrip()
            search_value = "{%s}" % key
            lines = [x for x in docstring.split("\n") if search_value in x]
            for line in lines:
                # only whitespace may precede the placeholder
                spaces = line.split(search_value)[0]
                assert set(spaces) <= {" "}
                new = textwrap.indent(textwrap.dedent(value), spaces)
                docstring = docstring.replace(line, new)
        func.__doc__ = docstring
        return func

    return _wrap


def format_mapping(mapping: Mapping[str, object]) -> str:
    """
    Format a mapping as "key: value" lines for use in docstrings.

    Examples
    --------
    >>> print(format_mapping({"M": "(x*y)*(u*v) = (x*u)*(y*v)"}))
    M: (x*y)*(u*v) = (x*u)*(y*v)
    """
    return "\n".join(f"{key}: {value}" for key, value in mapping.items())
