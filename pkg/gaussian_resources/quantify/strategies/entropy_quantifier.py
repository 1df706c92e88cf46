"""
Entropy Quantifier

Classes:
    - EntropyQuantifier: von Neumann entropy of the state.
"""
from ..base_quantifier import BaseQuantifier
from ..entropy import von_neumann_entropy
from ...utils.error_utils import helper_quantifier_error

__all__ = ['EntropyQuantifier']


class EntropyQuantifier(BaseQuantifier):
    @helper_quantifier_error
    def quantify(self, state) -> float:
        value = von_neumann_entropy(state)
        self.logger.debug(f"S = {value:.12g}")
        return value
