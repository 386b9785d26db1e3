from fourlab.core.display.console import ConsoleReporter

__all__ = ["ConsoleReporter"]
