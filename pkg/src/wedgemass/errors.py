class WedgeMassError(Exception):
    """Base class for errors raised by wedgemass."""


class UnknownSchemeError(WedgeMassError, ValueError):
    pass


class MeshError(WedgeMassError, ValueError):
    """Malformed or inconsistent mesh document."""


class InvalidElementError(MeshError):
    def __init__(self, index, sample, point, metric):
        self.index = index
        self.sample = sample
        self.point = point
        self.metric = metric
        super().__init__(
            f"element {index}: metric {metric:.6g} <= 0 at EX sample {sample + 1} "
            f"(xi={point.xi:.6g}, eta={point.eta:.6g}, zeta={point.zeta:.6g})")
