from django.conf import settings


DEFAULTS = {
    'SEARCH_BUDGET': 10**6,
    'PATH_SLACK': 4,
    'COEFFICIENTS': 'q',
    'PATH_ADJACENCY': 'adjacent',
    'MAX_GRID_DIMENSION': 4,
    'CERTIFICATE_DIR': None,
}


def topology_setting(name):
    """
    Look up a key of settings.TOPOLOGY.

    The algorithms are usable without a configured Django project (plain imports
    from a notebook or another program); in that case the built-in default is
    returned.
    """
    configured = {}
    if settings.configured:
        configured = getattr(settings, 'TOPOLOGY', {})

    try:
        return configured[name]
    except KeyError:
        return DEFAULTS[name]
