from poroshock.utilities.artifacts import read_csv, read_json, write_csv, write_json
from poroshock.utilities.baseline import compare_baseline
from poroshock.utilities.manifest import build_manifest, config_hash
from poroshock.utilities.pool import parallel_map
from poroshock.utilities.seeds import child_seed, spawn_generators
