# Local values for the digitopo settings module.
import os


SECRET_KEY = os.environ.get('DIGITOPO_SECRET_KEY', 'digitopo-local-only')

DEBUG = False

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'digitopo.sqlite3'),
    }
}

LOG_LEVEL = os.environ.get('DIGITOPO_LOG_LEVEL', 'WARNING')

# Node limit for contraction and section searches
SEARCH_BUDGET = 10**6

# Searched paths may be this much longer than the image diameter
PATH_SLACK = 4

# int, q or p<prime>
COEFFICIENTS = 'q'

# 'adjacent' compares synchronized paths pointwise (equal or adjacent);
# 'connected' only asks that both values share a component
PATH_ADJACENCY = 'adjacent'
