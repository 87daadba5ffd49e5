from pydantic import BaseModel, Field, computed_field


class RegionDiagConfig(BaseModel):
    """Constants of the sign-based region decomposition.

    C_2 solves C_1 = (1 - C_2)^{m-1} / (1 - (1 - C_2)^{m-1}). For small m - 1,
    1 - C_2 underflows the spacing of doubles near 1, so it is kept separately.
    """

    m: float = Field(gt=1.0, lt=2.0)
    C1: float = Field(default=0.05, gt=0.0, lt=1.0)
    q: int = Field(default=4, ge=4)
    # coercivity share used when calibrating the D1 constant C
    c0: float = Field(default=0.5, gt=0.0, le=1.0)

    @computed_field
    @property
    def one_minus_C2(self) -> float:
        return (self.C1 / (1.0 + self.C1)) ** (1.0 / (self.m - 1.0))

    @computed_field
    @property
    def C2(self) -> float:
        return 1.0 - self.one_minus_C2

    def relation_residual(self) -> float:
        a = self.one_minus_C2 ** (self.m - 1.0)
        return abs(a / (1.0 - a) - self.C1)
