# -*- coding: utf-8 -*-
"""
Define the exceptions raised by the convex character toolkit

DomainError   : the input is well formed but violates a precondition (exit status 1)
InputError    : the input cannot be read (exit status 2)
"""


class ConvexCharacterError(ValueError):
    """
    Base class of every error raised on purpose by the toolkit
    """
    exit_status = 1


class DomainError(ConvexCharacterError):
    exit_status = 1


class InputError(ConvexCharacterError):
    exit_status = 2


class UnknownTaxonError(DomainError):
    pass


class TaxonMismatchError(DomainError):
    pass


class NotAPartitionError(DomainError):
    pass


class PreconditionError(DomainError):
    pass


class OracleSizeError(DomainError):
    pass


class UnknownObjectiveError(DomainError):
    pass


class ParameterFileError(DomainError):
    pass


class NewickError(InputError):
    """
    Syntax or structure error in a Newick string.
    line and column are 1-based; line is None when the text did not come from a file
    """

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(self._render())

    def _render(self):
        where = []
        if self.line is not None:
            where.append(f'line {self.line}')
        if self.column is not None:
            where.append(f'column {self.column}')
        if where:
            return f'{self.message} ({", ".join(where)})'
        return self.message

    def at_line(self, line):
        return NewickError(self.message, line=line, column=self.column)


class InstanceError(InputError):
    pass
