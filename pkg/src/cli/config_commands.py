"""Configuration management CLI commands."""

import os
import sys

import click
from rich.console import Console
from rich.tree import Tree

from src.config.config_manager import get_config_manager, reset_config_manager

console = Console()


def _select_branch(branch: str) -> None:
    os.environ["SERRE_CONFIG_BRANCH"] = branch
    # Reset the global config manager to pick up the new branch
    reset_config_manager()


@click.group()
def config():
    """Configuration management commands."""
    pass


@config.command()
@click.option("--branch", default="base", help="Configuration branch to validate")
def validate(branch: str):
    """Validate configuration files."""
    _select_branch(branch)
    if get_config_manager().validate_config():
        console.print(f"✅ Configuration for branch '{branch}' is valid")
    else:
        console.print(f"❌ Configuration for branch '{branch}' is invalid", style="red")
        sys.exit(1)


@config.command()
@click.option("--branch", default="base", help="Configuration branch to show")
def show(branch: str):
    """Show the merged configuration of a branch."""
    _select_branch(branch)
    try:
        app_config = get_config_manager().load_app_config()
    except ValueError as e:
        console.print(f"❌ Error loading configuration: {e}", style="red")
        sys.exit(1)

    tree = Tree(f"Configuration: {branch}")
    tree.add(f"Name: {app_config.metadata.name}")

    search_tree = tree.add("Search")
    search_tree.add(f"Node budget: {app_config.search.node_budget}")
    search_tree.add(f"Search facet cap: {app_config.search.search_facet_cap}")
    search_tree.add(f"Face cap: {app_config.search.face_cap}")
    search_tree.add(f"Isomorphism vertex budget: {app_config.search.isomorphism_vertex_budget}")

    fields_tree = tree.add("Fields")
    fields_tree.add(f"Characteristics: {', '.join(map(str, app_config.fields.characteristics))}")
    fields_tree.add(f"Serre levels: {', '.join(map(str, app_config.fields.serre_levels))}")

    sweeps_tree = tree.add("Sweeps")
    for name, value in app_config.sweeps.model_dump().items():
        sweeps_tree.add(f"{name}: {value}")

    output_tree = tree.add("Output")
    output_tree.add(f"Format: {app_config.output.format}")
    output_tree.add(f"Witness directory: {app_config.output.witness_dir}")

    console.print(tree)


@config.command()
def list_branches():
    """List available configuration branches."""
    console.print("📁 Available configuration branches:")
    branches = get_config_manager().list_branches()
    for branch in branches:
        console.print(f"  • {branch}" + (" (default)" if branch == "base" else ""))
    if len(branches) == 1:
        console.print("  (no experimental branches found)")
