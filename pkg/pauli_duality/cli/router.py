"""Top-level command router: one subcommand per verification campaign."""

from __future__ import annotations

import re
from typing import Sequence

from pydantic import Field, PrivateAttr
from pydantic_settings import BaseSettings, CliApp, CliSubCommand, SettingsConfigDict

from pauli_duality.cli.commands import (
    EnergyScanCommand,
    EntropySweepCommand,
    FixedStateCommand,
    SolveZXZCommand,
    VerifyDualityCommand,
)

# One-letter fields (L, N, J, B) are registered as short options only.
_LONG_SINGLE = re.compile(r"--([A-Za-z])(?:=(.+))?", re.DOTALL)


def normalize_args(args: Sequence[str]) -> list[str]:
    """Rewrite ``--L 4`` as ``-L 4`` and ``--J=-1,1`` as ``-J-1,1``.

    The attached form keeps argparse from reading a negative list as a flag.
    """
    out: list[str] = []
    for position, arg in enumerate(args):
        if arg == "--":
            out.extend(args[position:])
            break
        match = _LONG_SINGLE.fullmatch(arg)
        if match is None:
            out.append(arg)
            continue
        name, value = match.groups()
        out.append(f"-{name}" if value is None else f"-{name}{value}")
    return out


class PauliDualityApp(BaseSettings):
    """Finite-size duality checks, ZXZ exact solution and generalized stabilizer states."""

    model_config = SettingsConfigDict(
        cli_prog_name="pauli-duality",
        cli_kebab_case=True,
        cli_implicit_flags=True,
        case_sensitive=True,
    )

    verify_duality: CliSubCommand[VerifyDualityCommand] = Field(description="Duality identities")
    solve_zxz: CliSubCommand[SolveZXZCommand] = Field(description="ZXZ chain exact solution")
    entropy_sweep: CliSubCommand[EntropySweepCommand] = Field(description="Single-site entropy sweep")
    energy_scan: CliSubCommand[EnergyScanCommand] = Field(description="E(J) = J E(1/J) convergence")
    fixed_state: CliSubCommand[FixedStateCommand] = Field(description="Fixed state of a generator file")

    _exit_code: int = PrivateAttr(default=0)

    @property
    def exit_code(self) -> int:
        return self._exit_code

    def cli_cmd(self) -> None:
        command = CliApp.run_subcommand(self)
        self._exit_code = command.exit_code
