from django.db import migrations, models
import django.db.models.deletion


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name='CensusRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('run_key', models.CharField(db_index=True, max_length=100, unique=True)),
                ('c_max', models.IntegerField()),
                ('orbit_cap', models.IntegerField()),
                ('status', models.CharField(choices=[('running', 'Running'), ('completed', 'Completed'), ('failed', 'Failed')], default='running', max_length=20)),
                ('manifold_count', models.IntegerField(default=0)),
                ('caveats', models.JSONField(default=list)),
                ('error_message', models.TextField(blank=True, null=True)),
                ('error_trace', models.TextField(blank=True, null=True)),
                ('started_at', models.DateTimeField(auto_now_add=True)),
                ('finished_at', models.DateTimeField(blank=True, null=True)),
            ],
            options={
                'db_table': 'census_runs',
                'ordering': ['-started_at'],
            },
        ),
        migrations.CreateModel(
            name='CensusManifold',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('complexity', models.IntegerField(db_index=True)),
                ('geometry', models.CharField(db_index=True, max_length=20)),
                ('manifold', models.CharField(max_length=255)),
                ('homology', models.CharField(max_length=100)),
                ('flags', models.JSONField(default=list)),
                ('aliases', models.JSONField(default=list)),
                ('run', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='manifolds', to='census.censusrun')),
            ],
            options={
                'db_table': 'census_manifolds',
                'ordering': ['complexity', 'id'],
                'unique_together': {('run', 'manifold')},
            },
        ),
    ]
