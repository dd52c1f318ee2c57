"""Exception hierarchy shared by all modules."""


class QEnergyError(Exception):
    """Base class for every error raised by qenergy."""


class DomainError(QEnergyError, ValueError):
    """An argument lies outside the admissible domain of an operation."""


class MissingParameterError(QEnergyError, KeyError):
    """A count rule references a platform parameter that is not defined."""

    def __init__(self, name: str, component: str | None = None):
        self.name = name
        self.component = component
        where = f" (component {component!r})" if component else ""
        super().__init__(f"missing platform parameter {name!r}{where}")

    def __str__(self) -> str:
        return self.args[0]


class DisconnectedGraphError(QEnergyError, ValueError):
    """The coupling graph is not connected; carries one unreachable pair."""

    def __init__(self, u: int, v: int):
        self.pair = (u, v)
        super().__init__(f"graph is disconnected: node {v} unreachable from node {u}")


class ConfigError(QEnergyError, ValueError):
    """A configuration document or scenario is invalid.

    ``field`` names the offending entry using a dotted path when known.
    """

    def __init__(self, message: str, field: str | None = None):
        self.field = field
        prefix = f"{field}: " if field else ""
        super().__init__(prefix + message)
