"""Configure Django for the pytest runner (mirrors manage.py)."""
import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "hridaya_kolam.settings")
django.setup()
