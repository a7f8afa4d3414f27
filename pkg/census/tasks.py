"""
Celery tasks for sharded census enumeration and stored census runs.
"""
import logging
import traceback

from celery import shared_task
from django.db import transaction
from django.utils import timezone

from .enumeration import CensusItem, build_report, census_jobs, enumerate_family, full_census
from .models import CensusManifold, CensusRun

logger = logging.getLogger(__name__)


@shared_task
def enumerate_shard(jobs, orbit_cap):
    """
    Enumerate a list of (family, complexity) jobs.
    Returns JSON-serializable item dicts.
    """
    items = []
    for family, complexity in jobs:
        found = enumerate_family(family, complexity, orbit_cap)
        logger.info(f"Shard job {family}@{complexity}: {len(found)} manifolds")
        items.extend(item.as_dict() for item in found)
    return items


def split_jobs(jobs, shards):
    """Round-robin the jobs over at most `shards` buckets."""
    buckets = [jobs[i::shards] for i in range(max(shards, 1))]
    return [bucket for bucket in buckets if bucket]


def gather_census(c_max, orbit_cap, shards=1, geometry=None):
    """Fan the census out over `shards` tasks and merge; the result does not depend on `shards`."""
    jobs = census_jobs(c_max, geometry)
    results = [enumerate_shard.delay(bucket, orbit_cap) for bucket in split_jobs(jobs, shards)]
    items = [CensusItem.from_dict(data) for result in results for data in result.get()]
    if geometry:
        return build_report([item for item in items if item.geometry == geometry], c_max, (geometry,))
    return build_report(items, c_max)


def run_key(c_max, orbit_cap, geometry=None):
    scope = geometry.value if geometry else 'all'
    return f"census-c{c_max}-cap{orbit_cap}-{scope}"


def _claim_run(key, c_max, orbit_cap, force):
    """
    Create a running CensusRun, or return None when a completed or running
    one exists and force is not set. The row is locked while it is checked.
    """
    with transaction.atomic():
        existing = CensusRun.objects.select_for_update().filter(run_key=key).first()
        if existing:
            if existing.status != CensusRun.STATUS_FAILED and not force:
                logger.info(f"Census run {key} is {existing.status}, skipping")
                return None
            logger.info(f"Replacing census run {key} (status {existing.status})")
            existing.delete()
        return CensusRun.objects.create(run_key=key, c_max=c_max, orbit_cap=orbit_cap)


def _record(run, report):
    with transaction.atomic():
        CensusManifold.objects.bulk_create([
            CensusManifold(
                run=run,
                complexity=item.complexity,
                geometry=item.geometry.value,
                manifold=item.manifold,
                homology=str(item.homology),
                flags=list(item.flags),
                aliases=list(item.aliases),
            )
            for item in report.items()
        ])
        run.status = CensusRun.STATUS_COMPLETED
        run.manifold_count = len(report.items())
        run.caveats = list(report.caveats)
        run.finished_at = timezone.now()
        run.save()
    logger.info(f"Stored census run {run.run_key}: {run.manifold_count} manifolds")


def _fail(run, exc):
    logger.error(f"Census run {run.run_key} failed: {exc}", exc_info=True)
    run.status = CensusRun.STATUS_FAILED
    run.error_message = str(exc)
    run.error_trace = traceback.format_exc()
    run.finished_at = timezone.now()
    run.save()


def store_report(report, orbit_cap, force=False, geometry=None):
    """Persist an already computed report; returns the run, or None when skipped."""
    key = run_key(report.c_max, orbit_cap, geometry)
    run = _claim_run(key, report.c_max, orbit_cap, force)
    if run is None:
        return None
    try:
        _record(run, report)
    except Exception as exc:
        _fail(run, exc)
        raise
    return run


@shared_task
def run_census(c_max, orbit_cap, force=False):
    """Compute and store a complete census, idempotent on its run key."""
    key = run_key(c_max, orbit_cap)
    run = _claim_run(key, c_max, orbit_cap, force)
    if run is None:
        existing = CensusRun.objects.get(run_key=key)
        status = 'skipped' if existing.status == CensusRun.STATUS_COMPLETED else 'in-progress'
        return {'run_key': key, 'status': status, 'manifold_count': existing.manifold_count}
    try:
        report = full_census(c_max, orbit_cap)
        _record(run, report)
    except Exception as exc:
        _fail(run, exc)
        raise
    return {'run_key': key, 'status': run.status, 'manifold_count': run.manifold_count}
