"""
Print |A| (or ||A|| with --conj) for a matrix of determinant +1 or -1.
"""
from django.core.management.base import BaseCommand

from topology.gl2 import GL2Mat, conj_norm, decompose, norm
from topology.management.errors import domain_errors


class Command(BaseCommand):
    help = 'Print the tree norm |A| of [[a,b],[c,d]], or ||A|| with --conj'

    def add_arguments(self, parser):
        parser.add_argument('matrix', help='matrix as [[a,b],[c,d]]')
        parser.add_argument(
            '--conj',
            action='store_true',
            help='minimise over conjugates',
        )

    def handle(self, *args, **options):
        with domain_errors():
            A = GL2Mat.parse(options['matrix'])
            value = conj_norm(A) if options['conj'] else norm(A)
            decomposition = decompose(A)
        self.stdout.write(str(value))
        self.stdout.write(f'decomposition: {decomposition}')
