"""
Print the complexity profile c0..c9 of a manifold.

Non-hyperbolic chain-link fillings print their graph-manifold description and
an upper bound on c9 instead.
"""
import json

from django.conf import settings
from django.core.management.base import BaseCommand

from topology.chainlink import is_hyperbolic, nonhyperbolic_identity
from topology.complexity import graph_upper_bounds, profile
from topology.descriptors import ChainFilling
from topology.exceptions import UnsupportedManifoldError
from topology.grammar import parse_manifold
from topology.invariants import homology_of
from topology.management.errors import domain_errors


class Command(BaseCommand):
    help = 'Print c0..c9 for a manifold, e.g. lens(7,2) or chain(-4,-3/2,1)'

    def add_arguments(self, parser):
        parser.add_argument('manifold', help='manifold in the text syntax (see docs/GRAMMAR.md)')
        parser.add_argument(
            '--orbit-cap',
            type=int,
            default=settings.CENSUS_ORBIT_CAP,
            help='height cap for chain-link orbit exploration',
        )
        parser.add_argument(
            '--format',
            choices=['text', 'json'],
            default='text',
            help='output format',
        )

    def handle(self, *args, **options):
        as_json = options['format'] == 'json'
        with domain_errors():
            descriptor = parse_manifold(options['manifold'])
            if isinstance(descriptor, ChainFilling) and not is_hyperbolic(descriptor.triple):
                self._graph_bound(descriptor, as_json)
                return
            result = profile(descriptor, options['orbit_cap'])
            homology = homology_of(descriptor)

        if as_json:
            data = {'manifold': str(descriptor), **result.as_dict()}
            data.update(complexity=result.complexity, homology=str(homology))
            self.stdout.write(json.dumps(data))
            return
        values = ','.join('inf' if v == float('inf') else str(v) for v in result.values)
        self.stdout.write(f'{descriptor}')
        self.stdout.write(f'c0..c9 = [{values}]')
        self.stdout.write(f"tags   = [{','.join(str(tag) for tag in result.tags)}]")
        self.stdout.write(f'c = {result.complexity}')
        self.stdout.write(f'H1 = {homology}')

    def _graph_bound(self, descriptor, as_json):
        description = nonhyperbolic_identity(descriptor.triple)
        bound, reason = None, None
        try:
            bound = graph_upper_bounds(description)
        except UnsupportedManifoldError as exc:
            reason = str(exc)
        if as_json:
            data = {
                'manifold': str(descriptor),
                'hyperbolic': False,
                'description': str(description),
                'c9_upper_bound': bound,
            }
            self.stdout.write(json.dumps(data))
            return
        self.stdout.write(f'{descriptor} is not hyperbolic')
        self.stdout.write(f'= {description}')
        if bound is None:
            self.stdout.write(self.style.WARNING(reason))
            return
        self.stdout.write(f'c9 <= {bound} (upper-bound)')
