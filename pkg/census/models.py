"""
Persisted census runs.
"""
from django.db import models


class CensusRun(models.Model):
    """One stored census, keyed by its parameters (idempotency)."""

    STATUS_RUNNING = 'running'
    STATUS_COMPLETED = 'completed'
    STATUS_FAILED = 'failed'
    STATUS_CHOICES = [
        (STATUS_RUNNING, 'Running'),
        (STATUS_COMPLETED, 'Completed'),
        (STATUS_FAILED, 'Failed'),
    ]

    run_key = models.CharField(max_length=100, unique=True, db_index=True)
    c_max = models.IntegerField()
    orbit_cap = models.IntegerField()
    status = models.CharField(max_length=20, choices=STATUS_CHOICES, default=STATUS_RUNNING)
    manifold_count = models.IntegerField(default=0)
    caveats = models.JSONField(default=list)

    error_message = models.TextField(blank=True, null=True)
    error_trace = models.TextField(blank=True, null=True)

    started_at = models.DateTimeField(auto_now_add=True)
    finished_at = models.DateTimeField(null=True, blank=True)

    class Meta:
        db_table = 'census_runs'
        ordering = ['-started_at']

    def __str__(self):
        return f"{self.run_key} ({self.status})"


class CensusManifold(models.Model):
    """A manifold of a stored census, in canonical text form."""

    run = models.ForeignKey(CensusRun, on_delete=models.CASCADE, related_name='manifolds')
    complexity = models.IntegerField(db_index=True)
    geometry = models.CharField(max_length=20, db_index=True)
    manifold = models.CharField(max_length=255)
    homology = models.CharField(max_length=100)
    flags = models.JSONField(default=list)
    aliases = models.JSONField(default=list)

    class Meta:
        db_table = 'census_manifolds'
        unique_together = ['run', 'manifold']
        ordering = ['complexity', 'id']

    def __str__(self):
        return f"c={self.complexity} {self.geometry} {self.manifold}"
