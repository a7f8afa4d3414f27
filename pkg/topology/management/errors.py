"""
Exit-code mapping shared by the management commands.
"""
from contextlib import contextmanager

from django.core.management.base import CommandError

from topology.exceptions import ManifoldSyntaxError, TopologyError

USAGE_ERROR = 1
DOMAIN_ERROR = 2


@contextmanager
def domain_errors():
    """Re-raise library errors as CommandError with the documented exit code."""
    try:
        yield
    except ManifoldSyntaxError as exc:
        raise CommandError(str(exc), returncode=USAGE_ERROR) from exc
    except TopologyError as exc:
        raise CommandError(str(exc), returncode=DOMAIN_ERROR) from exc
