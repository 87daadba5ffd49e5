from poroshock.schemas.setting import GroupMetadataSchema, SettingMetadataSchema, SettingType, SettingValueSchema
from poroshock.schemas.analysis import RegionDiagConfig
from poroshock.schemas.report import (
    CheckResult,
    ColumnDrift,
    DecayFit,
    DiffReport,
    EnergyReport,
    ExperimentSummary,
    ExponentLedger,
    GradientReport,
    InequalityReport,
    Manifest,
    ProfileReport,
    RateChain,
    RegionReport,
    SemigroupCheckResult,
)
