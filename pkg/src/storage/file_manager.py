import re
from pathlib import Path

from src.complexes.simplicial import SimplicialComplex
from src.exceptions import WitnessError
from src.models.report import Witness, WitnessFile
from src.models.sweep import Certificate


class FileManager:
    """Manages file paths and naming conventions for witness files."""

    WITNESS_BASE_PATH = "witnesses"

    @staticmethod
    def slug(text: str) -> str:
        """
        Filesystem-safe form of a subject or property name.

        Args:
            text: e.g. "C_8(1,4)" or "cohen_macaulay[2]"

        Returns:
            e.g. "C_8-1-4" or "cohen_macaulay-2"
        """
        return re.sub(r"[^A-Za-z0-9_]+", "-", text).strip("-")

    @staticmethod
    def get_witness_path(subject: str, index: int, witness: Witness, base_path: str | Path | None = None) -> Path:
        """
        Get the path for one witness file.

        Returns:
            Path like "witnesses/C_6-1-3/00-DisconnectedLinkFace-s2.json"
        """
        base = Path(base_path) if base_path else Path(FileManager.WITNESS_BASE_PATH)
        name = f"{index:02d}-{witness.kind.value}-{FileManager.slug(witness.property)}.json"
        return base / FileManager.slug(subject) / name

    @staticmethod
    def ensure_local_directory(file_path: str | Path) -> Path:
        """
        Ensure the parent directory exists for a local file path.

        Args:
            file_path: File path to check

        Returns:
            Path object for the file
        """
        path = Path(file_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        return path

    @staticmethod
    def write_witnesses(
        subject: str,
        complex_: SimplicialComplex,
        witnesses: list[Witness],
        graph: dict | None = None,
        base_path: str | Path | None = None,
    ) -> list[Path]:
        """Write each witness as a standalone JSON file carrying its complex."""
        paths = []
        for index, witness in enumerate(witnesses):
            path = FileManager.ensure_local_directory(
                FileManager.get_witness_path(subject, index, witness, base_path)
            )
            record = WitnessFile(subject=subject, graph=graph, complex=complex_.to_dict(), witness=witness)
            path.write_text(record.model_dump_json(indent=2) + "\n", encoding="utf-8")
            paths.append(path)
        return paths

    @staticmethod
    def read_witness(path: str | Path) -> WitnessFile:
        try:
            return WitnessFile.model_validate_json(Path(path).read_text(encoding="utf-8"))
        except (OSError, ValueError) as e:
            raise WitnessError(f"Cannot read witness file {path}: {e}", {"path": str(path)}) from e

    @staticmethod
    def get_certificate_path(theorem: str, index: int, base_path: str | Path | None = None) -> Path:
        """
        Get the path for one isomorphism certificate.

        Returns:
            Path like "witnesses/certificates/davis-domke/003.json"
        """
        base = Path(base_path) if base_path else Path(FileManager.WITNESS_BASE_PATH)
        return base / "certificates" / FileManager.slug(theorem) / f"{index:03d}.json"

    @staticmethod
    def write_certificates(
        theorem: str, certificates: list[Certificate], base_path: str | Path | None = None
    ) -> list[Path]:
        paths = []
        for index, certificate in enumerate(certificates):
            path = FileManager.ensure_local_directory(FileManager.get_certificate_path(theorem, index, base_path))
            path.write_text(certificate.model_dump_json(indent=2) + "\n", encoding="utf-8")
            paths.append(path)
        return paths

    @staticmethod
    def read_certificate(path: str | Path) -> Certificate:
        try:
            return Certificate.model_validate_json(Path(path).read_text(encoding="utf-8"))
        except (OSError, ValueError) as e:
            raise WitnessError(f"Cannot read certificate file {path}: {e}", {"path": str(path)}) from e
