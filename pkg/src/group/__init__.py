"""基本群：群表示、字问题、同伦判定与 Cayley 球"""
from .words import GroupWord
from .presentation import (
    DiscretePath,
    Presentation,
    abelianization_rank,
    free_group,
    pi1_presentation,
    rebase_loop,
    surface_group,
    zxz_group,
)
from .word_problem import is_trivial_word
from .homotopy import homotopic, transport_loop
from .cayley import CayleyBall, cayley_ball

__all__ = [
    'GroupWord', 'DiscretePath', 'Presentation', 'abelianization_rank', 'free_group',
    'pi1_presentation', 'rebase_loop', 'surface_group', 'zxz_group', 'is_trivial_word',
    'homotopic', 'transport_loop', 'CayleyBall', 'cayley_ball',
]
