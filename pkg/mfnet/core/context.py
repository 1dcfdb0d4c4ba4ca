from collections.abc import Iterator
from threading import RLock
from typing import Generic, TypeVar

_T = TypeVar("_T")


class SingletonStore(Generic[_T]):
    """Lock-guarded registry holding at most one instance per class.

    Shifted-grid builds may run on worker threads, which all read the same
    settings singleton, so every access to the registry happens under a lock.
    """

    def __init__(self) -> None:
        """Create an empty store."""
        self._lock = RLock()
        self._instances_by_class: dict[type[_T], _T] = {}

    def __iter__(self) -> Iterator[_T]:
        """Iterate over a snapshot of the stored singletons."""
        with self._lock:
            return iter(list(self._instances_by_class.values()))

    def __len__(self) -> int:
        """Return the number of stored singletons."""
        with self._lock:
            return len(self._instances_by_class)

    def load(self, cls: type[_T]) -> _T:
        """Return the singleton of `cls`, instantiating it on first access."""
        with self._lock:
            if cls not in self._instances_by_class:
                self.push(cls())
            return self._instances_by_class[cls]

    def push(self, instance: _T) -> None:
        """Store `instance` as the singleton of its class, replacing any other."""
        with self._lock:
            self._instances_by_class[type(instance)] = instance

    def pop(self, cls: type[_T]) -> _T:
        """Remove and return the singleton of `cls`."""
        with self._lock:
            return self._instances_by_class.pop(cls)

    def reset(self) -> None:
        """Forget all singletons."""
        with self._lock:
            self._instances_by_class.clear()
