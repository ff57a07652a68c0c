"""Real-time multi-tape recognizers with instrumented step budgets.

The core recognizer accepts the recursive two-letter combing language
using exactly two bi-infinite work tapes, consuming one input symbol
per step.  Per input symbol each work tape moves its head at most one
cell and writes at most one cell; the instrumentation asserts this
budget on every step (a violation raises, it is never just logged).

Working principle: after reading w_j w_{j-1} the machine holds w_{j-1}
on one tape and w_j on the other, with marked squares at distance
l(w_{j-1}) from each end of the w_j tape.  The input can only continue
with copies of w_j-with-last-two-letters-swapped; the machine checks
the copies by traversing the w_j tape alternately right-to-left and
left-to-right (the body of w_j is a palindrome, so a backward traversal
can feed a two-step-delayed comparison), while extending the other tape
into w_{j+1} by echoing the input.  A copy that ends in the unswapped
pair signals the next recursion level; the tapes then exchange roles.
Acceptance requires ending at a copy boundary or at a marked square,
plus the final letter 'a' (which encodes the basis parity rule).

The higher recognizers are built by closure: the positive language adds
a regular all-b branch, the signed rank-2 language absolutizes letters
under a sign-consistency tracker, and the rank-n language dispatches
each letter to the pairwise projection recognizers.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .words import Word

A = 0
B = 1

# Cell mark bits (the letter is bit 0; the cell alphabet stays finite).
BEGIN = 2      # first cell of the tape contents
BEGIN2 = 4     # second cell
END = 8        # last cell
END2 = 16      # second-to-last cell
DLEFT = 32     # marked square at distance l(w_{j-1}) from the left end
DRIGHT = 64    # marked square at distance l(w_{j-1}) from the right end
DTEMP = 128    # temporary mark written at each copied block boundary
PDLEFT = 256   # freshly placed left mark, resolved on the next scan
PDRIGHT = 512  # freshly placed right mark, resolved on the next scan

_PHI = 1
_W = 2


class RealTimeViolation(Exception):
    """A work tape exceeded its one-move/one-write budget for a symbol."""


class Tape:
    """Sparse bi-infinite tape with a per-symbol operation budget."""

    __slots__ = ("cells", "head", "moves", "writes", "lo", "hi")

    def __init__(self):
        self.cells: dict[int, int] = {}
        self.head = 0
        self.moves = 0
        self.writes = 0
        self.lo: int | None = None
        self.hi: int | None = None

    def begin_symbol(self):
        self.moves = 0
        self.writes = 0

    def move(self, delta: int):
        if self.moves >= 1:
            raise RealTimeViolation("tape moved twice for one input symbol")
        self.moves = 1
        self.head += delta

    def write(self, mask: int):
        if self.writes >= 1:
            raise RealTimeViolation("tape wrote twice for one input symbol")
        self.writes = 1
        self.cells[self.head] = mask
        if self.lo is None or self.head < self.lo:
            self.lo = self.head
        if self.hi is None or self.head > self.hi:
            self.hi = self.head

    def read(self) -> int | None:
        return self.cells.get(self.head)

    def content(self) -> list[int]:
        if self.lo is None:
            return []
        return [self.cells.get(i, 0) for i in range(self.lo, self.hi + 1)]

    def letters(self) -> list[int]:
        return [m & 1 for m in self.content()]


@dataclass
class DistinguishedConfig:
    """Snapshot of the machine at a recursion-level boundary."""

    depth: int
    prev_word: list[int]
    current_word: list[int]
    prev_head_at_start: bool
    prev_head_at_end: bool
    current_head_at_start: bool
    current_head_at_end: bool
    left_mark_offset: int | None
    right_mark_offset: int | None


@dataclass
class TraceStep:
    input_symbol: int
    moves: list[int]
    writes: list[int]
    control_state: str


@dataclass
class RtTrace:
    steps: list[TraceStep] = field(default_factory=list)
    max_moves_per_tape: int = 0
    max_writes_per_tape: int = 0
    symbols: int = 0
    work_tapes: int = 2


# Control states.
_EMPTY, _RUN, _W0, _SCAN, _DEAD = range(5)
_STATE_NAMES = ("empty", "run", "w0", "scan", "dead")


class LsharpMachine:
    """Real-time recognizer for the core two-letter language."""

    def __init__(self, record_steps: bool = False):
        self.tapes = (Tape(), Tape())
        self.trace = RtTrace()
        self._record = record_steps
        self.state = _EMPTY
        self.alpha = self.beta = -1
        self.last_letter = -1
        self.pos = 0
        self.reject_pos: int | None = None
        self.finished = False
        self.accepted: bool | None = None
        # Scan control (bounded): roles, direction, tail letters, flags.
        self._pattern: Tape | None = None
        self._build: Tape | None = None
        self.scan_dir = -1          # -1 backward, +1 forward
        self.build_dir = +1         # +1 append, -1 prepend
        self.x = self.y = -1        # current pattern ends with ...x y
        self.at_copy_start = False
        self.stage = 0              # 0, 1, or 2 (= "third feed or later")
        self.branch = 0             # 0 unknown, _PHI, _W
        self.fifo: deque[int] = deque()
        self.first_copy = False
        self.first_level = True
        self.seen_temp = 0
        self.crossed_far = False
        self.boundary_ok = False
        self.stop_ok = False
        self.distinguished = False
        self.did_second_setup_write = False
        self.depth = 0              # instrumentation only

    # -- public driver ---------------------------------------------------

    def feed(self, letter: int):
        if self.finished:
            raise RuntimeError("machine already halted")
        if letter not in (0, 1):
            raise ValueError(f"symbol {letter!r} outside the input alphabet")
        t0, t1 = self.tapes
        t0.begin_symbol()
        t1.begin_symbol()
        self.last_letter = letter
        state = self.state
        if state == _SCAN:
            self._scan_feed(letter)
        elif state == _RUN:
            self._run_feed(letter)
        elif state == _EMPTY:
            self._empty_feed(letter)
        elif state == _W0:
            self._w0_feed(letter)
        # _DEAD consumes the symbol with no tape activity.
        self.pos += 1
        tr = self.trace
        tr.symbols += 1
        m = t0.moves if t0.moves > t1.moves else t1.moves
        w = t0.writes if t0.writes > t1.writes else t1.writes
        if m > tr.max_moves_per_tape:
            tr.max_moves_per_tape = m
        if w > tr.max_writes_per_tape:
            tr.max_writes_per_tape = w
        if self._record:
            tr.steps.append(
                TraceStep(letter, [t0.moves, t1.moves], [t0.writes, t1.writes],
                          _STATE_NAMES[self.state])
            )

    def finish(self) -> bool:
        if self.finished:
            return bool(self.accepted)
        self.finished = True
        state = self.state
        if state == _RUN:
            ok = self.alpha == A
        elif state == _W0:
            ok = self.last_letter == A
        elif state == _SCAN:
            ok = (self.boundary_ok or self.stop_ok) and self.last_letter == A
        else:
            ok = False
        if not ok and self.reject_pos is None:
            self.reject_pos = self.pos
        self.accepted = ok
        return ok

    # -- setup phases ----------------------------------------------------

    def _empty_feed(self, c: int):
        self.alpha, self.beta = c, 1 - c
        self.tapes[0].write(c | BEGIN)
        self.state = _RUN

    def _run_feed(self, c: int):
        t = self.tapes[0]
        extra = 0
        if not self.did_second_setup_write:
            extra = BEGIN2 | PDLEFT
            self.did_second_setup_write = True
        t.move(+1)
        if c == self.alpha:
            t.write(c | extra)
        else:
            t.write(c | END | extra)
            self.state = _W0

    def _w0_feed(self, c: int):
        if c != self.alpha:
            self._die(self.pos)
            return
        self.tapes[1].write(c | BEGIN | END)
        self._pattern, self._build = self.tapes[0], self.tapes[1]
        self.scan_dir = -1
        self.build_dir = +1
        self.x, self.y = self.alpha, self.beta
        self.state = _SCAN
        self.at_copy_start = True
        self.first_copy = True
        self.first_level = True
        self.seen_temp = 0
        self.crossed_far = False
        self.boundary_ok = True
        self.stop_ok = False
        self.distinguished = True
        self.depth = 1

    def _die(self, pos: int):
        self.state = _DEAD
        if self.reject_pos is None:
            self.reject_pos = pos

    # -- the scan loop ---------------------------------------------------

    def _scan_feed(self, c: int):
        pat = self._pattern
        bld = self._build
        self.boundary_ok = False
        self.stop_ok = False
        self.distinguished = False
        if self.at_copy_start:
            self.at_copy_start = False
            self.stage = 0
            self.branch = 0
            self.fifo.clear()
        elif self.stage < 2:
            self.stage += 1
        stage = self.stage
        bwd = self.scan_dir < 0

        if stage > 0:
            pat.move(-1 if bwd else +1)
        bits = pat.read()
        if bits is None:
            raise RealTimeViolation("pattern head left the tape contents")
        if self.first_copy:
            bits = self._housekeep(pat, bits, stage, bwd)
        letter = bits & 1

        # Delayed comparison on backward traversals (palindromic body).
        popped = -1
        if stage == 2:
            popped = self.fifo.popleft()
        self.fifo.append(c)
        if bwd and popped >= 0 and popped != letter:
            self._die(self.pos - 2)
            return

        if bwd:
            z1, z2 = bits & BEGIN2, bits & BEGIN
        else:
            z1, z2 = bits & END2, bits & END

        x, y = self.x, self.y
        if z1:
            self.branch = _PHI if c == y else _W
        elif z2:
            want = x if self.branch == _PHI else y
            if self.branch == 0 or c != want:
                self._die(self.pos)
                return
        elif not bwd:
            if c != letter:
                self._die(self.pos)
                return

        # Ending here is a valid truncated final copy only while the
        # copy still agrees with the swapped pattern.  On backward
        # traversals the last two letters fed are still in the delay
        # buffer; they must equal the tail of w_{j-1}, which the level
        # alternation pins to the control pair (x, y).
        stop_mark = DLEFT if bwd else DRIGHT
        if (bits & stop_mark) and self.branch != _W:
            if not bwd:
                self.stop_ok = True
            elif len(self.fifo) >= 2:
                self.stop_ok = self.fifo[-2] == x and self.fifo[-1] == y
            else:
                self.stop_ok = self.fifo[-1] == y

        pending = 0
        if self.crossed_far:
            pending = PDLEFT if self.build_dir > 0 else PDRIGHT
            self.crossed_far = False
        if self.first_copy and (bits & stop_mark):
            self.crossed_far = True

        # Extend the other tape: appends echo the input (with the tail
        # swap), prepends emit the reversed copy via the two-step buffer.
        if self.build_dir > 0:
            wl = y if z1 else (x if z2 else c)
        else:
            wl = y if stage == 0 else (x if stage == 1 else popped)
        marks = pending
        if self.branch == _W:
            if z1:
                marks |= END2 if self.build_dir > 0 else BEGIN2
            elif z2:
                marks |= END if self.build_dir > 0 else BEGIN
        if z2:
            marks |= DTEMP
        if self.first_level and self.first_copy and stage == 0:
            # The very first extension of the one-cell tape supplies the
            # future content's second-from-start mark.
            marks |= BEGIN2
        bld.move(+1 if self.build_dir > 0 else -1)
        bld.write(wl | marks)

        if z2:
            if self.branch == _PHI:
                self.at_copy_start = True
                self.scan_dir = -self.scan_dir
                self.boundary_ok = True
                self.first_copy = False
            else:
                self._level_up()

    def _level_up(self):
        self._pattern, self._build = self._build, self._pattern
        self.x, self.y = self.y, self.x
        next_scan = -1 if self.build_dir > 0 else +1
        self.build_dir = +1 if self.scan_dir > 0 else -1
        self.scan_dir = next_scan
        self.at_copy_start = True
        self.first_copy = True
        self.first_level = False
        self.seen_temp = 0
        self.crossed_far = False
        self.boundary_ok = True
        self.stop_ok = False
        self.distinguished = True
        self.depth += 1

    def _housekeep(self, pat: Tape, bits: int, stage: int, bwd: bool) -> int:
        """First-traversal mark maintenance: resolve fresh marks, delete
        the temporaries and every mark left over from earlier levels."""
        orig = bits
        if bwd:
            if stage >= 2:
                # The right-hand mark of the fresh level lands on the
                # first block boundary behind the end: a copy temporary,
                # or (single-copy levels) the old prefix's end cell.
                if self.seen_temp == 0 and bits & (DTEMP | END):
                    bits |= DRIGHT
                    self.seen_temp = 1
                elif bits & DRIGHT:
                    bits &= ~DRIGHT
                bits &= ~(END | END2 | DTEMP)
                if bits & DLEFT and not bits & PDLEFT:
                    bits &= ~DLEFT
            elif bits & DTEMP:
                bits &= ~DTEMP
            if stage == 1 and self.first_level:
                # The initial a^{i}b block is written before its length
                # is known; its right-hand marks are patched here.
                bits |= END2 | DRIGHT
                self.seen_temp = 1
            if bits & PDLEFT:
                bits = (bits & ~PDLEFT) | DLEFT
        else:
            if stage >= 2:
                if self.seen_temp == 0 and bits & (DTEMP | BEGIN):
                    bits |= DLEFT
                    self.seen_temp = 1
                elif bits & DLEFT:
                    bits &= ~DLEFT
                bits &= ~(BEGIN | BEGIN2 | DTEMP)
                if bits & DRIGHT and not bits & PDRIGHT:
                    bits &= ~DRIGHT
            elif bits & DTEMP:
                bits &= ~DTEMP
            if bits & PDRIGHT:
                bits = (bits & ~PDRIGHT) | DRIGHT
        if bits != orig:
            pat.write(bits)
        return bits

    # -- introspection ---------------------------------------------------

    def snapshot(self) -> DistinguishedConfig | None:
        """The current level-boundary configuration, if the machine is at
        one (immediately after reading w_j w_{j-1})."""
        if self.state != _SCAN or not self.distinguished:
            return None
        pat, bld = self._pattern, self._build
        content = pat.content()
        n = len(content)
        # Effective marked squares: a fresh pending mark if present, else
        # the position the first traversal will resolve it to (the first
        # block boundary behind the scanning end).
        left = next((i for i, m in enumerate(content) if m & PDLEFT), None)
        if left is None:
            if self.scan_dir > 0:
                left = next(
                    (i for i in range(1, n) if content[i] & (DTEMP | BEGIN)), None
                )
            else:
                left = next(
                    (i for i in range(n - 1, -1, -1) if content[i] & DLEFT), None
                )
        right = next((i for i, m in enumerate(content) if m & PDRIGHT), None)
        if right is None:
            if self.scan_dir < 0:
                if self.first_level:
                    right = n - 2
                else:
                    right = next(
                        (
                            i
                            for i in range(n - 2, -1, -1)
                            if content[i] & (DTEMP | END)
                        ),
                        None,
                    )
            else:
                right = next((i for i, m in enumerate(content) if m & DRIGHT), None)
        return DistinguishedConfig(
            depth=self.depth,
            prev_word=bld.letters(),
            current_word=pat.letters(),
            prev_head_at_start=bld.head == bld.lo,
            prev_head_at_end=bld.head == bld.hi,
            current_head_at_start=pat.head == pat.lo,
            current_head_at_end=pat.head == pat.hi,
            left_mark_offset=left,
            right_mark_offset=right,
        )


@dataclass
class RunResult:
    accepted: bool
    reject_pos: int | None
    trace: RtTrace


def _letters01(w: Word | Sequence[int]) -> list[int]:
    if isinstance(w, Word):
        out = []
        for i, s in w.letters:
            if s != 1 or i not in (0, 1):
                raise ValueError("recognizer input must use the two positive letters")
            out.append(i)
        return out
    return list(w)


def recognize_lsharp(w: Word | Sequence[int], record_steps: bool = False) -> RunResult:
    m = LsharpMachine(record_steps=record_steps)
    for c in _letters01(w):
        m.feed(c)
    m.finish()
    return RunResult(bool(m.accepted), m.reject_pos, m.trace)


class L2PlusMachine:
    """The positive rank-2 language: the core recognizer in parallel
    with the regular all-b branch."""

    def __init__(self, record_steps: bool = False):
        self.core = LsharpMachine(record_steps=record_steps)
        self.all_b = True

    def feed(self, letter: int):
        if letter == A:
            self.all_b = False
        self.core.feed(letter)

    def finish(self) -> bool:
        return self.core.finish() or self.all_b

    @property
    def trace(self) -> RtTrace:
        return self.core.trace


def member_l2plus01_machine(seq: Sequence[int]) -> bool:
    m = L2PlusMachine()
    for c in seq:
        m.feed(c)
    return m.finish()


class L2Machine:
    """The full signed rank-2 language: a sign-consistency tracker per
    coordinate feeding the positive recognizer with absolutized letters."""

    def __init__(self, record_steps: bool = False):
        self.inner = L2PlusMachine(record_steps=record_steps)
        self.signs = [0, 0]
        self.dead = False
        self.pos = 0

    def feed(self, letter: tuple[int, int]):
        i, s = letter
        if self.dead:
            self.pos += 1
            return
        if self.signs[i] == 0:
            self.signs[i] = s
        elif self.signs[i] != s:
            self.dead = True
            self.pos += 1
            return
        self.inner.feed(i)
        self.pos += 1

    def finish(self) -> bool:
        return (not self.dead) and self.inner.finish()


class LnMachine:
    """The rank-n language: per-coordinate sign trackers plus one
    positive rank-2 recognizer per coordinate pair, each advanced only
    on its own two letters."""

    def __init__(self, n: int, record_steps: bool = False):
        if n < 1:
            raise ValueError("rank must be >= 1")
        self.n = n
        self.signs = [0] * n
        self.dead = False
        self.machines: dict[tuple[int, int], L2PlusMachine] = {
            (i, j): L2PlusMachine(record_steps=record_steps)
            for i in range(n)
            for j in range(i + 1, n)
        }

    def feed(self, letter: tuple[int, int]):
        i, s = letter
        if not (0 <= i < self.n):
            raise ValueError("letter outside the alphabet")
        if self.dead:
            return
        if self.signs[i] == 0:
            self.signs[i] = s
        elif self.signs[i] != s:
            self.dead = True
            return
        for a in range(i):
            self.machines[(a, i)].feed(B)
        for b in range(i + 1, self.n):
            self.machines[(i, b)].feed(A)

    def finish(self) -> bool:
        if self.dead:
            return False
        return all(m.finish() for m in self.machines.values())


def recognize_l2plus(w: Word | Sequence[int]) -> bool:
    return member_l2plus01_machine(_letters01(w))


def recognize_l2(w: Word | Iterable[tuple[int, int]]) -> bool:
    m = L2Machine()
    letters = w.letters if isinstance(w, Word) else w
    for letter in letters:
        m.feed(letter)
    return m.finish()


def recognize_ln(w: Word | Iterable[tuple[int, int]], n: int) -> bool:
    m = LnMachine(n)
    letters = w.letters if isinstance(w, Word) else w
    for letter in letters:
        m.feed(letter)
    return m.finish()
