"""Formal contexts and the two derivation operators.

A formal context is a triple of objects, attributes and a binary incidence
relation between them.  Subsets of either side are held as bit vectors
(plain Python ints) indexed by declaration order, so deriving a set is a fold
of bitwise ands over precomputed row or column masks.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

import numpy as np

from ._bits import from_indices, full, iter_bits, popcount
from .errors import ContextMismatch, DuplicateName, InvalidName, UnknownName

__all__ = [
    "FormalContext",
    "ObjectSet",
    "AttributeSet",
    "build_context",
    "derive_objects",
    "derive_attributes",
    "close_attributes",
    "close_objects",
]


def _check_names(names: Sequence[str], what: str) -> tuple[str, ...]:
    names = tuple(names)
    seen = set()
    for name in names:
        if not isinstance(name, str) or not name:
            raise InvalidName(f"{what} names must be non-empty strings, got {name!r}")
        if name in seen:
            raise DuplicateName(f"{what} name {name!r} declared twice")
        seen.add(name)
    return names


class FormalContext:
    """Immutable binary relation between named objects and named attributes.

    Parameters
    ----------
    objects, attributes : sequence of str
        Unique, non-empty names.  Their order fixes the bit positions used
        by :class:`ObjectSet` and :class:`AttributeSet`.
    incidence : array_like of bool, shape (len(objects), len(attributes))
        ``incidence[g, m]`` is true iff object ``g`` has attribute ``m``.
    """

    __slots__ = ("_objects", "_attributes", "_obj_index", "_attr_index",
                 "_incidence", "_rows", "_cols")

    def __init__(self, objects: Sequence[str], attributes: Sequence[str],
                 incidence=None):
        self._objects = _check_names(objects, "object")
        self._attributes = _check_names(attributes, "attribute")
        shape = (len(self._objects), len(self._attributes))
        if incidence is None:
            matrix = np.zeros(shape, dtype=bool)
        else:
            matrix = np.array(incidence, dtype=bool, copy=True)
            if matrix.size == 0:
                matrix = matrix.reshape(shape)
            if matrix.shape != shape:
                raise ValueError(
                    f"incidence has shape {matrix.shape}, expected {shape}")
        matrix.setflags(write=False)
        self._incidence = matrix
        self._obj_index = {name: i for i, name in enumerate(self._objects)}
        self._attr_index = {name: j for j, name in enumerate(self._attributes)}
        self._rows = tuple(from_indices(np.flatnonzero(row).tolist()) for row in matrix)
        self._cols = tuple(from_indices(np.flatnonzero(col).tolist()) for col in matrix.T)

    # -- basic accessors ---------------------------------------------------
    @property
    def objects(self) -> tuple[str, ...]:
        return self._objects

    @property
    def attributes(self) -> tuple[str, ...]:
        return self._attributes

    @property
    def incidence(self) -> np.ndarray:
        """Read-only boolean matrix of shape ``(n_objects, n_attributes)``."""
        return self._incidence

    @property
    def shape(self) -> tuple[int, int]:
        return self._incidence.shape

    @property
    def n_objects(self) -> int:
        return len(self._objects)

    @property
    def n_attributes(self) -> int:
        return len(self._attributes)

    def object_index(self, name: str) -> int:
        try:
            return self._obj_index[name]
        except KeyError:
            raise UnknownName(f"unknown object {name!r}") from None

    def attribute_index(self, name: str) -> int:
        try:
            return self._attr_index[name]
        except KeyError:
            raise UnknownName(f"unknown attribute {name!r}") from None

    def has(self, obj: str, attr: str) -> bool:
        return bool(self._incidence[self.object_index(obj), self.attribute_index(attr)])

    def pairs(self) -> list[tuple[str, str]]:
        """All incident ``(object, attribute)`` pairs in row-major order."""
        return [(self._objects[g], self._attributes[m])
                for g, m in zip(*np.nonzero(self._incidence))]

    # -- set constructors --------------------------------------------------
    def object_set(self, names: Iterable[str] = ()) -> ObjectSet:
        if isinstance(names, str):
            names = [names]
        return ObjectSet(self, from_indices(self.object_index(n) for n in names))

    def attribute_set(self, names: Iterable[str] = ()) -> AttributeSet:
        if isinstance(names, str):
            names = [names]
        return AttributeSet(self, from_indices(self.attribute_index(n) for n in names))

    def all_objects(self) -> ObjectSet:
        return ObjectSet(self, full(self.n_objects))

    def all_attributes(self) -> AttributeSet:
        return AttributeSet(self, full(self.n_attributes))

    # -- bit-level derivations (used by the enumerators) --------------------
    def row_bits(self, g: int) -> int:
        return self._rows[g]

    def column_bits(self, m: int) -> int:
        return self._cols[m]

    def intent_bits(self, objects: int) -> int:
        """Attributes shared by every object in the bit set ``objects``."""
        result = full(self.n_attributes)
        rows = self._rows
        for g in iter_bits(objects):
            result &= rows[g]
            if not result:
                break
        return result

    def extent_bits(self, attributes: int) -> int:
        """Objects having every attribute in the bit set ``attributes``."""
        result = full(self.n_objects)
        cols = self._cols
        for m in iter_bits(attributes):
            result &= cols[m]
            if not result:
                break
        return result

    # -- value semantics ---------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, FormalContext):
            return NotImplemented
        return (self._objects == other._objects
                and self._attributes == other._attributes
                and np.array_equal(self._incidence, other._incidence))

    def __hash__(self):
        return hash((self._objects, self._attributes, self._rows))

    def __repr__(self):
        n, m = self.shape
        return f"<FormalContext {n} objects x {m} attributes, {int(self._incidence.sum())} pairs>"


def build_context(objects: Sequence[str], attributes: Sequence[str],
                  incidence: Iterable[tuple[str, str]]) -> FormalContext:
    """Build a context from name lists and ``(object, attribute)`` pairs.

    Repeated pairs are harmless.  A pair naming an undeclared object or
    attribute raises :class:`UnknownName`.

    >>> ctx = build_context(["o1", "o2"], ["m1"], [("o2", "m1")])
    >>> derive_attributes(ctx, ctx.attribute_set(["m1"])).names
    ('o2',)
    """
    objects = _check_names(objects, "object")
    attributes = _check_names(attributes, "attribute")
    obj_index = {name: i for i, name in enumerate(objects)}
    attr_index = {name: j for j, name in enumerate(attributes)}
    matrix = np.zeros((len(objects), len(attributes)), dtype=bool)
    for g, m in incidence:
        if g not in obj_index:
            raise UnknownName(f"incidence pair ({g!r}, {m!r}) names unknown object {g!r}")
        if m not in attr_index:
            raise UnknownName(f"incidence pair ({g!r}, {m!r}) names unknown attribute {m!r}")
        matrix[obj_index[g], attr_index[m]] = True
    return FormalContext(objects, attributes, matrix)


class _NameSet:
    """A subset of one side of a context, stored as a bit vector."""

    __slots__ = ("context", "bits")
    _side = ""

    def __init__(self, context: FormalContext, bits: int = 0):
        if bits < 0 or bits >> len(self._universe_of(context)):
            raise ValueError(f"bit vector {bits:#x} out of range for this {self._side} set")
        self.context = context
        self.bits = bits

    @staticmethod
    def _universe_of(context: FormalContext) -> tuple[str, ...]:
        raise NotImplementedError

    @staticmethod
    def _index_of(context: FormalContext) -> dict[str, int]:
        raise NotImplementedError

    @property
    def names(self) -> tuple[str, ...]:
        universe = self._universe_of(self.context)
        return tuple(universe[i] for i in iter_bits(self.bits))

    def indices(self) -> list[int]:
        return list(iter_bits(self.bits))

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __len__(self) -> int:
        return popcount(self.bits)

    def __bool__(self) -> bool:
        return self.bits != 0

    def __contains__(self, name) -> bool:
        i = self._index_of(self.context).get(name)
        return i is not None and bool(self.bits >> i & 1)

    def _other(self, other) -> int:
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.context is not self.context:
            raise ContextMismatch(f"{type(self).__name__} operands belong to different contexts")
        return other.bits

    def __or__(self, other):
        return type(self)(self.context, self.bits | self._other(other))

    def __and__(self, other):
        return type(self)(self.context, self.bits & self._other(other))

    def __sub__(self, other):
        return type(self)(self.context, self.bits & ~self._other(other))

    def complement(self):
        return type(self)(self.context, full(len(self._universe_of(self.context))) & ~self.bits)

    def issubset(self, other) -> bool:
        return self.bits & ~self._other(other) == 0

    def issuperset(self, other) -> bool:
        return self._other(other) & ~self.bits == 0

    __le__ = issubset
    __ge__ = issuperset

    def __lt__(self, other):
        return self.issubset(other) and self.bits != other.bits

    def __gt__(self, other):
        return self.issuperset(other) and self.bits != other.bits

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.context is other.context and self.bits == other.bits

    def __hash__(self):
        return hash((type(self).__name__, id(self.context), self.bits))

    def __repr__(self):
        return f"{type(self).__name__}({{{', '.join(self.names)}}})"


class ObjectSet(_NameSet):
    """Subset of a context's objects."""

    __slots__ = ()
    _side = "object"

    @staticmethod
    def _universe_of(context):
        return context.objects

    @staticmethod
    def _index_of(context):
        return context._obj_index


class AttributeSet(_NameSet):
    """Subset of a context's attributes."""

    __slots__ = ()
    _side = "attribute"

    @staticmethod
    def _universe_of(context):
        return context.attributes

    @staticmethod
    def _index_of(context):
        return context._attr_index


def _require(ctx: FormalContext, s, cls) -> None:
    if not isinstance(s, cls):
        raise TypeError(f"expected {cls.__name__}, got {type(s).__name__}")
    if s.context is not ctx:
        raise ContextMismatch(f"{cls.__name__} was built against a different context")


def derive_objects(ctx: FormalContext, objects: ObjectSet) -> AttributeSet:
    """Attributes common to all given objects; every attribute for the empty set."""
    _require(ctx, objects, ObjectSet)
    return AttributeSet(ctx, ctx.intent_bits(objects.bits))


def derive_attributes(ctx: FormalContext, attributes: AttributeSet) -> ObjectSet:
    """Objects having all given attributes; every object for the empty set."""
    _require(ctx, attributes, AttributeSet)
    return ObjectSet(ctx, ctx.extent_bits(attributes.bits))


def close_attributes(ctx: FormalContext, attributes: AttributeSet) -> AttributeSet:
    """Smallest intent containing ``attributes``."""
    _require(ctx, attributes, AttributeSet)
    return AttributeSet(ctx, ctx.intent_bits(ctx.extent_bits(attributes.bits)))


def close_objects(ctx: FormalContext, objects: ObjectSet) -> ObjectSet:
    """Smallest extent containing ``objects``."""
    _require(ctx, objects, ObjectSet)
    return ObjectSet(ctx, ctx.extent_bits(ctx.intent_bits(objects.bits)))
