"""
Enumerate the census of geometric manifolds and print it.
"""
import logging

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from census.enumeration import GEOMETRY_FAMILIES, HYPERBOLIC_MAX_COMPLEXITY, MAX_COMPLEXITY
from census.report import RENDERERS, render
from census.tasks import gather_census, store_report
from topology.complexity import profile
from topology.descriptors import SeifertFibred
from topology.exceptions import CensusIdentificationError
from topology.management.errors import USAGE_ERROR, domain_errors
from topology.seifert import Geometry, mstar_info

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = 'List closed geometric manifolds by complexity and geometry'

    def add_arguments(self, parser):
        parser.add_argument(
            '--cmax',
            type=int,
            default=settings.CENSUS_MAX_COMPLEXITY,
            help=f'largest complexity (0..{MAX_COMPLEXITY}; {HYPERBOLIC_MAX_COMPLEXITY} with --geometry hyperbolic)',
        )
        parser.add_argument(
            '--format',
            choices=sorted(RENDERERS),
            default='table',
            help='output format',
        )
        parser.add_argument(
            '--geometry',
            choices=[geometry.value for geometry in GEOMETRY_FAMILIES],
            help='only list this geometry',
        )
        parser.add_argument(
            '--orbit-cap',
            type=int,
            default=settings.CENSUS_ORBIT_CAP,
            help='height cap for chain-link orbit exploration',
        )
        parser.add_argument(
            '--shards',
            type=int,
            default=settings.CENSUS_DEFAULT_SHARDS,
            help='number of Celery tasks to spread the enumeration over',
        )
        parser.add_argument(
            '--store',
            action='store_true',
            help='persist the run (skipped if an identical run completed)',
        )
        parser.add_argument(
            '--force',
            action='store_true',
            help='with --store, replace a completed run',
        )
        parser.add_argument(
            '--verify',
            action='store_true',
            help='recompute every profile and check it against its row',
        )

    def handle(self, *args, **options):
        c_max = options['cmax']
        geometry = Geometry(options['geometry']) if options['geometry'] else None
        self._check_usage(c_max, geometry, options)

        logger.info(f"Census up to complexity {c_max} over {options['shards']} shard(s)")
        with domain_errors():
            report = gather_census(c_max, options['orbit_cap'], options['shards'], geometry)
            if options['verify']:
                self._verify(report, options['orbit_cap'])
            if options['store']:
                run = store_report(report, options['orbit_cap'], options['force'], geometry)
                if run is None:
                    self.stderr.write(self.style.WARNING(
                        'Identical census already stored or running, use --force to replace it'
                    ))
                else:
                    self.stderr.write(self.style.SUCCESS(f'Stored {run.manifold_count} manifolds as {run.run_key}'))

        self.stdout.write(render(report, options['format']), ending='')

    def _check_usage(self, c_max, geometry, options):
        if not 0 <= c_max <= HYPERBOLIC_MAX_COMPLEXITY:
            raise CommandError(f'--cmax must lie in 0..{HYPERBOLIC_MAX_COMPLEXITY}', returncode=USAGE_ERROR)
        if c_max > MAX_COMPLEXITY and geometry != Geometry.HYPERBOLIC:
            raise CommandError(
                f'--cmax {c_max} is only available with --geometry hyperbolic',
                returncode=USAGE_ERROR,
            )
        if options['shards'] < 1:
            raise CommandError('--shards must be at least 1', returncode=USAGE_ERROR)
        if options['orbit_cap'] < 1:
            raise CommandError('--orbit-cap must be positive', returncode=USAGE_ERROR)
        if options['force'] and not options['store']:
            raise CommandError('--force only applies with --store', returncode=USAGE_ERROR)

    def _verify(self, report, orbit_cap):
        items = report.items()
        for item in items:
            result = profile(item.descriptor, orbit_cap)
            if result.complexity != item.complexity:
                raise CensusIdentificationError(
                    f'{item.manifold} is listed at {item.complexity} but has c9 = {result.complexity}'
                )
            if not result.is_non_increasing():
                raise CensusIdentificationError(f'{item.manifold} has an increasing profile {result}')
            early = isinstance(item.descriptor, SeifertFibred) and mstar_info(item.descriptor.manifold)
            if not early and not result.is_well_behaved():
                raise CensusIdentificationError(f'{item.manifold} has an irregular profile {result}')
        self.stderr.write(self.style.SUCCESS(f'Verified {len(items)} profiles'))
