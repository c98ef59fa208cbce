import click


def budget_options(**kwargs):
    """Options limiting the work of every command of a script.

    Unset options leave the ``with`` clause of each command, then the
    ``[budgets]`` section of ``~/.sphereforgerc``, in charge.
    """

    def custom_budget_options(func):

        func = click.option(
            "-t",
            "--timeout",
            type=click.FloatRange(min=0),
            default=None,
            help="Wall-clock budget of a single command, in seconds "
            "[default: 300]",
            **kwargs
        )(func)
        return click.option(
            "-s",
            "--gb-steps",
            type=click.IntRange(min=0),
            default=None,
            help="Maximum number of S-pair reductions a single command may "
            "spend [default: 2000000]",
            **kwargs
        )(func)

    return custom_budget_options
