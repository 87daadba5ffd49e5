"""
Experiment pipelines, one module per kind. Each module registers its
pipeline with ``register_experiment``; modules whose name starts with an
underscore hold shared plumbing and are skipped by discovery.
"""
