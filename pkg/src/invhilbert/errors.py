class ConsistencyError(ArithmeticError):
    """An exact computation produced a value that theory forbids.

    Raised for non-integral inner products, negative multiplicities and
    similar; it always signals a bug upstream, never bad user input.
    """
