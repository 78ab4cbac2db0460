"""The shipped instance bundles, built from :mod:`gradcat.stock`."""

from __future__ import annotations

from typing import Callable

from . import stock
from .graded import identity_graded_morphism
from .localisable import identity_family, theta_to_graded
from .serialize import Bundle


def identity_bundle() -> Bundle:
    return Bundle().add("Id1", stock.identity_commutative_1graded())


def truncation_bundle() -> Bundle:
    t = stock.truncation()
    b = Bundle().add("truncation", t)
    b.add("truncation-id", identity_graded_morphism(t))
    return b


def reader_bundle() -> Bundle:
    return Bundle().add("reader", stock.thin_reader())


def bz2_bundle() -> Bundle:
    return Bundle().add("bz2comm", stock.bz2_commutative()).add("twisted", stock.twisted_bz2_monad())


def pairing_bundle() -> Bundle:
    thin = stock.thin_pairing()
    tw, pl = stock.twisted_pairings()
    b = Bundle()
    b.add("reader-pairing", thin)
    b.add("reader-identity", identity_family(thin.formal), src=thin, dst=thin)
    b.add("twisted-pairing", tw)
    b.add("plain-pairing", pl)
    swap = stock.twisted_family()
    b.add("swap", swap, src=tw, dst=pl)
    b.add("swap-graded", theta_to_graded(swap, tw, pl), src=tw, dst=pl)
    b.add("closure", stock.closure_formal_monad())
    return b


CORPUS: dict[str, Callable[[], Bundle]] = {
    "identity": identity_bundle,
    "truncation": truncation_bundle,
    "reader": reader_bundle,
    "bz2": bz2_bundle,
    "pairing": pairing_bundle,
}
