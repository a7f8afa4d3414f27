"""
List the bounded bricks of complexity at most 9.
"""
from django.core.management.base import BaseCommand

from topology.complexity import BRICKS


class Command(BaseCommand):
    help = 'List the bricks B0..B10 with their complexity'

    def handle(self, *args, **options):
        for brick in BRICKS:
            self.stdout.write(f'{brick.name:4} {brick.complexity}  {brick.description}')
