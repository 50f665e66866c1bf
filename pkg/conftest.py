import os

import django


os.environ.setdefault("DJANGO_SETTINGS_MODULE", "digitopo.settings")
django.setup()
