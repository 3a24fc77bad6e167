"""Cooperative cancellation shared between the race runner and the engines."""
import threading
import time

from sigsurf.errors import Cancelled


class CancelToken:
    """Set once; engines call :meth:`check` between outer-loop iterations."""

    def __init__(self):
        self._event = threading.Event()
        self.cancelled_at = None

    def cancel(self):
        if not self._event.is_set():
            self.cancelled_at = time.perf_counter()
            self._event.set()

    @property
    def cancelled(self):
        return self._event.is_set()

    def check(self):
        if self._event.is_set():
            raise Cancelled()


def check(token):
    if token is not None:
        token.check()
