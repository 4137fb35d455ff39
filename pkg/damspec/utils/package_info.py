import typing


class PackageInfo:
    """
    No-op informative class describing the damspec package and the numerical
    stack it runs on.
    """

    @staticmethod
    def version() -> str:
        """
        The version of damspec
        Returns
        -------
        The damspec package version: str
        """
        from damspec import __version__ as PACKAGE_VERSION

        return str(PACKAGE_VERSION)

    @staticmethod
    def package_name() -> str:
        return "damspec"

    @staticmethod
    def package_full_name() -> str:
        """
        The package name followed by its version, e.g. ``damspec 0.3.0``
        """
        return "{name} {version}".format(name=PackageInfo.package_name(), version=PackageInfo.version())

    @staticmethod
    def dependency_versions() -> typing.Dict[str, str]:
        """
        Normalized versions of the numerical dependencies.
        """
        import numpy  # type: ignore
        import scipy  # type: ignore
        from packaging.version import Version

        return {"numpy": str(Version(numpy.__version__)), "scipy": str(Version(scipy.__version__))}

    @staticmethod
    def generator() -> typing.Dict[str, typing.Any]:
        """
        The ``generator`` block stamped into every JSON report.
        """
        return {
            "name": PackageInfo.package_name(),
            "version": PackageInfo.version(),
            "dependencies": PackageInfo.dependency_versions(),
        }
