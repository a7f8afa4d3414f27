"""
Print the complexity |p,q| of a coprime pair.
"""
from django.core.management.base import BaseCommand

from topology.farey import pq_complexity
from topology.management.errors import domain_errors


class Command(BaseCommand):
    help = 'Print |p,q| for a coprime pair'

    def add_arguments(self, parser):
        parser.add_argument('p', type=int)
        parser.add_argument('q', type=int)

    def handle(self, *args, **options):
        with domain_errors():
            value = pq_complexity(options['p'], options['q'])
        self.stdout.write(str(value))
