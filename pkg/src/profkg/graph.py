"""Knowledge-graph data model.

Entities get dense ids assigned items-first, then users, then auxiliary
entities in first-seen order.  Relations get dense ids in first-seen order;
when inverse augmentation is on, every base relation ``r`` gains a distinct
reverse relation ``n_base + r`` and every non-self-loop triple (h, r, t)
gains a reversed twin (t, r_inv, h).  The graph is immutable after
construction and safe to share across workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    EmptyGraphError,
    InvalidEntityError,
    OverlappingRolesError,
    UnknownLabelError,
    UserWithoutInteractionsError,
)
from .seeding import derive_seed

DEFAULT_INTERACT_LABEL = "interact"
INVERSE_SUFFIX = "_inv"


@dataclass(frozen=True)
class Triple:
    head: int
    relation: int
    tail: int


@dataclass
class GraphStats:
    n_entities: int
    n_users: int
    n_items: int
    n_auxiliary: int
    n_relations: int
    n_triples_original: int
    n_triples_total: int
    n_interactions: int
    n_self_loops: int
    inverse_augmented: bool

    def lines(self):
        return [
            f"entities            {self.n_entities}",
            f"  users             {self.n_users}",
            f"  items             {self.n_items}",
            f"  auxiliary         {self.n_auxiliary}",
            f"relations (base)    {self.n_relations}",
            f"interactions        {self.n_interactions}",
            f"triples w/o interactions  {self.n_triples_original - self.n_interactions}",
            f"triples total (augmented) {self.n_triples_total}",
            f"self loops          {self.n_self_loops}",
            f"inverse augmented   {self.inverse_augmented}",
        ]


class KnowledgeGraph:
    """Triple store with role subsets and a per-head neighbor index."""

    def __init__(
        self,
        entity_labels: list[str],
        relation_labels: list[str],
        n_base_relations: int,
        users: frozenset[int],
        items: frozenset[int],
        triples: list[Triple],
        n_original: int,
        interact_relation: int | None,
        inverse_augmented: bool,
        n_self_loops: int,
    ):
        self.entity_labels = entity_labels
        self.entity_ids = {lab: i for i, lab in enumerate(entity_labels)}
        self.relation_labels = relation_labels
        self.n_base_relations = n_base_relations
        self.users = users
        self.items = items
        self.triples = triples
        self.n_original = n_original
        self.interact_relation = interact_relation
        self.inverse_augmented = inverse_augmented
        self.n_self_loops = n_self_loops

        self.neighbor_index: list[list[tuple[int, int]]] = [[] for _ in entity_labels]
        for t in triples:
            self.neighbor_index[t.head].append((t.relation, t.tail))

        self.interactions: list[tuple[int, int]] = [
            (t.head, t.tail)
            for t in triples[:n_original]
            if interact_relation is not None and t.relation == interact_relation
        ]

    # -- basic shape ---------------------------------------------------------

    @property
    def n_entities(self) -> int:
        return len(self.entity_labels)

    @property
    def n_relations(self) -> int:
        """Total relation count, reverse relations included."""
        return len(self.relation_labels)

    @property
    def interact_inverse(self) -> int | None:
        if self.inverse_augmented and self.interact_relation is not None:
            return self.n_base_relations + self.interact_relation
        return None

    def original_triples(self) -> list[Triple]:
        return self.triples[: self.n_original]

    def kind_of(self, entity: int) -> str:
        if entity in self.users:
            return "user"
        if entity in self.items:
            return "item"
        return "auxiliary"

    def item_list(self) -> list[int]:
        return sorted(self.items)

    def user_list(self) -> list[int]:
        return sorted(self.users)

    def auxiliary_list(self) -> list[int]:
        roles = self.users | self.items
        return [e for e in range(self.n_entities) if e not in roles]

    def stats(self) -> GraphStats:
        return GraphStats(
            n_entities=self.n_entities,
            n_users=len(self.users),
            n_items=len(self.items),
            n_auxiliary=self.n_entities - len(self.users) - len(self.items),
            n_relations=self.n_base_relations,
            n_triples_original=self.n_original,
            n_triples_total=len(self.triples),
            n_interactions=len(self.interactions),
            n_self_loops=self.n_self_loops,
            inverse_augmented=self.inverse_augmented,
        )

    # -- derived graphs -------------------------------------------------------

    def with_interactions(self, pairs: list[tuple[int, int]]) -> "KnowledgeGraph":
        """Same vocabulary and KG triples, but a different interaction set.

        Used to build the training graph: message passing and profiling must
        only see training interactions, while entity/relation ids stay
        aligned with the full graph.
        """
        kg_part = [
            (t.head, t.relation, t.tail)
            for t in self.original_triples()
            if t.relation != self.interact_relation
        ]
        rel = self.interact_relation
        if rel is None:
            raise InvalidEntityError("graph has no interaction relation")
        raw = kg_part + [(u, rel, v) for u, v in pairs]
        return _assemble(
            entity_labels=self.entity_labels,
            base_relation_labels=self.relation_labels[: self.n_base_relations],
            users=self.users,
            items=self.items,
            raw=raw,
            interact_relation=rel,
            add_inverse=self.inverse_augmented,
        )


def _assemble(entity_labels, base_relation_labels, users, items, raw,
              interact_relation, add_inverse) -> KnowledgeGraph:
    triples = [Triple(h, r, t) for h, r, t in raw]
    n_original = len(triples)
    n_self = sum(1 for t in triples if t.head == t.tail)
    n_base = len(base_relation_labels)
    relation_labels = list(base_relation_labels)
    if add_inverse:
        relation_labels += [lab + INVERSE_SUFFIX for lab in base_relation_labels]
        triples = triples + [
            Triple(t.tail, n_base + t.relation, t.head)
            for t in triples[:n_original]
            if t.head != t.tail
        ]
    return KnowledgeGraph(
        entity_labels=entity_labels,
        relation_labels=relation_labels,
        n_base_relations=n_base,
        users=users,
        items=items,
        triples=triples,
        n_original=n_original,
        interact_relation=interact_relation,
        inverse_augmented=add_inverse,
        n_self_loops=n_self,
    )


def build_graph(
    raw_triples: list[tuple[str, str, str]],
    user_labels: list[str],
    item_labels: list[str],
    *,
    add_inverse: bool = True,
    interact_label: str = DEFAULT_INTERACT_LABEL,
    auto_register: bool = True,
) -> KnowledgeGraph:
    """Assign dense ids, index neighbors, optionally add reverse edges.

    Entities referenced by a triple but declared in neither role set are
    auto-registered as auxiliary entities unless ``auto_register`` is off,
    in which case they raise ``UnknownLabelError``.
    """
    overlap = set(user_labels) & set(item_labels)
    if overlap:
        raise OverlappingRolesError(
            f"labels declared as both user and item: {sorted(overlap)[:5]}"
        )
    if not raw_triples:
        raise EmptyGraphError("no triples provided")

    entity_labels: list[str] = []
    entity_ids: dict[str, int] = {}

    def register(label: str) -> int:
        entity_ids[label] = len(entity_labels)
        entity_labels.append(label)
        return entity_ids[label]

    def touch(label: str) -> int:
        if label in entity_ids:
            return entity_ids[label]
        if not auto_register:
            raise UnknownLabelError(f"undeclared entity label: {label!r}")
        return register(label)

    # items first, then users, then auxiliaries in first-seen order
    for lab in item_labels:
        register(lab)
    for lab in user_labels:
        register(lab)

    items = frozenset(entity_ids[lab] for lab in item_labels)
    users = frozenset(entity_ids[lab] for lab in user_labels)

    relation_labels: list[str] = []
    relation_ids: dict[str, int] = {}
    raw: list[tuple[int, int, int]] = []
    for h_lab, r_lab, t_lab in raw_triples:
        h = touch(h_lab)
        t = touch(t_lab)
        if r_lab not in relation_ids:
            relation_ids[r_lab] = len(relation_labels)
            relation_labels.append(r_lab)
        raw.append((h, relation_ids[r_lab], t))

    interact_relation = relation_ids.get(interact_label)
    return _assemble(
        entity_labels=entity_labels,
        base_relation_labels=relation_labels,
        users=users,
        items=items,
        raw=raw,
        interact_relation=interact_relation,
        add_inverse=add_inverse,
    )


def neighbors(g: KnowledgeGraph, h: int) -> list[tuple[int, int]]:
    """All (relation, tail) pairs of triples headed at ``h``, insertion order."""
    if not 0 <= h < g.n_entities:
        raise InvalidEntityError(f"entity id {h} out of range [0, {g.n_entities})")
    return list(g.neighbor_index[h])


@dataclass
class InteractionSplit:
    train: list[tuple[int, int]]
    val: list[tuple[int, int]]
    test: list[tuple[int, int]]
    seed: int
    _user_all: dict[int, set[int]] | None = field(default=None, repr=False)

    def user_items(self, subset: str) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for u, v in getattr(self, subset):
            out.setdefault(u, []).append(v)
        return out

    def all_interacted(self) -> dict[int, set[int]]:
        """user -> set of every item the user interacted with, any subset."""
        if self._user_all is None:
            acc: dict[int, set[int]] = {}
            for part in (self.train, self.val, self.test):
                for u, v in part:
                    acc.setdefault(u, set()).add(v)
            self._user_all = acc
        return self._user_all


def split_interactions(
    g: KnowledgeGraph,
    ratios: tuple[float, float, float] = (0.7, 0.1, 0.2),
    seed: int = 0,
) -> InteractionSplit:
    """Per-user proportional train/val/test split.

    Counts are floor(r_train*n) train and floor(r_val*n) val with the
    remainder to test, then rebalanced so every user keeps at least one
    training interaction.
    """
    if abs(sum(ratios) - 1.0) > 1e-9 or any(r < 0 for r in ratios):
        raise ValueError(f"ratios must be non-negative and sum to 1, got {ratios}")

    by_user: dict[int, list[int]] = {}
    for u, v in g.interactions:
        by_user.setdefault(u, []).append(v)
    missing = [u for u in g.users if u not in by_user]
    if missing:
        labs = [g.entity_labels[u] for u in sorted(missing)[:5]]
        raise UserWithoutInteractionsError(
            f"{len(missing)} user(s) have no interactions, e.g. {labs}"
        )

    rng = np.random.default_rng(derive_seed(seed, "split"))
    train: list[tuple[int, int]] = []
    val: list[tuple[int, int]] = []
    test: list[tuple[int, int]] = []
    for u in sorted(by_user):
        pool = by_user[u]
        order = rng.permutation(len(pool))
        shuffled = [pool[i] for i in order]
        n = len(shuffled)
        n_tr = int(ratios[0] * n)
        n_val = int(ratios[1] * n)
        n_te = n - n_tr - n_val
        if n_tr == 0:
            if n_te > 0:
                n_te -= 1
            else:
                n_val -= 1
            n_tr = 1
        train += [(u, v) for v in shuffled[:n_tr]]
        val += [(u, v) for v in shuffled[n_tr:n_tr + n_val]]
        test += [(u, v) for v in shuffled[n_tr + n_val:]]
    return InteractionSplit(train=train, val=val, test=test, seed=seed)
