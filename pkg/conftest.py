import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "hybridqec.settings")
django.setup()
