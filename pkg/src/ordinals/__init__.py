"""Symbolic ordinal-notation engine: normal forms and arithmetic below the
ceiling H1, fundamental and distinguished sequences, numeric hierarchies, and
the constructive sequence/normal-function equivalences."""

from .arith import (
    CnfView,
    EQUAL,
    GREATER,
    HausdorffView,
    LESS,
    add,
    cnf_leading,
    compare,
    hausdorff_view,
    index_add,
    index_multiply,
    index_sub,
    multiply,
    subtract,
)
from .equivalence import ConstrainedSeq, F_from_f_eval, constrain_seq, psi_eval, seq_from_psi
from .errors import BudgetError, CapError, DomainError, GuardViolation
from .fundseq import (
    PhiEtaSpec,
    SeqSpec,
    check_coherence,
    dist_seq,
    dist_seq_spec,
    index_fs,
    index_seq,
    phi_eta_decompose,
    tau,
)
from .hierarchies import Budget, grow_eval, hardy_eval
from .notation import ParseError, SourceSpan, parse, print_term
from .terms import (
    Count,
    CountableTerm,
    FApp,
    Fin,
    HSum,
    IndexTerm,
    Kind,
    OMEGA,
    OMEGA_IX,
    Phi,
    Sum,
    TopSucc,
    Zero,
    assert_normal_form,
    classify_kind,
    nat,
    term_rank,
)
from .veblen import (
    E1,
    ETA0,
    H1,
    LAMBDA0,
    NamedOrdinal,
    ZETA0,
    F_apply,
    eps,
    last_index,
    named,
    omega_power,
    phi_apply,
    value_set_member,
)

__all__ = [name for name in dir() if not name.startswith("_")]
