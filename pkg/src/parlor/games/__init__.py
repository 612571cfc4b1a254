"""The game suite: deterministic rule machines behind one contract.

Seventeen environments across single-, two- and multi-player setups,
each registered under a ``<Name>-v<digit>`` id.
"""

from __future__ import annotations

from .base import (
    ActionSpace,
    Game,
    GameRules,
    SeedStreams,
    TerminalInfo,
    mean_ranks,
    outcome,
    ranking_from_scores,
)
from .blind_auction import BlindAuction
from .connect_four import ConnectFour
from .dont_say_it import DontSayIt
from .feedback import mastermind_feedback, wordle_feedback
from .guess_number import GuessTheNumber
from .hangman import Hangman
from .hanoi import TowerOfHanoi
from .kuhn_poker import KuhnPoker
from .liars_dice import LiarsDice
from .mastermind import Mastermind
from .minesweeper import Minesweeper
from .negotiation import SimpleNegotiation
from .nim import Nim
from .pig_dice import PigDice
from .prisoners_dilemma import IteratedPrisonersDilemma
from .skills import SKILL_NAMES, skill_weights, skills_for
from .snake import Snake
from .tictactoe import TicTacToe
from .wordle import Wordle

ALL_GAMES: tuple[type[Game], ...] = (
    # single-player
    GuessTheNumber,
    Hangman,
    Mastermind,
    Wordle,
    Minesweeper,
    TowerOfHanoi,
    # two-player
    TicTacToe,
    ConnectFour,
    Nim,
    PigDice,
    KuhnPoker,
    DontSayIt,
    SimpleNegotiation,
    IteratedPrisonersDilemma,
    # multi-player
    LiarsDice,
    Snake,
    BlindAuction,
)

_REGISTRY: dict[str, type[Game]] = {g.rules.env_id: g for g in ALL_GAMES}


def registry() -> dict[str, type[Game]]:
    """The immutable env_id -> game class map (treat as read-only)."""
    return dict(_REGISTRY)


def env_ids() -> tuple[str, ...]:
    return tuple(sorted(_REGISTRY))
