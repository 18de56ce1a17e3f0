# -*- coding: utf-8 -*-

# Calculates the current version number. If possible, this is the output
# of "git describe", adapted to the setuptools versioning scheme. Outside
# of a git working copy (an unpacked release tarball) it falls back on
# RELEASE-VERSION and then on the version already in zpoly/_version.py.
#
# Use it from setup.py:
#
# from scripts.version import get_git_version
#
# setup(
#     version=get_git_version(),
#     ...
# )
#
# RELEASE-VERSION and zpoly/_version.py are rewritten whenever git reports
# a different version.

import os.path
import re
import subprocess

__all__ = ("get_git_version",)

VERSION_MODULE = os.path.join("zpoly", "_version.py")
RELEASE_FILE = "RELEASE-VERSION"


def call_git_describe(abbrev=4):
    try:
        out = subprocess.run(["git", "describe", "--long", "--dirty", "--abbrev=%d" % abbrev],
            stdout=subprocess.PIPE, stderr=subprocess.DEVNULL, check=True)
    except (OSError, subprocess.CalledProcessError):
        return None
    line = out.stdout.decode("utf-8").strip()
    return line or None


def _read_first_line(path):
    try:
        with open(path, "r") as handle:
            return handle.readline().strip() or None
    except OSError:
        return None


def read_release_version():
    return _read_first_line(RELEASE_FILE)


def read_module_version():
    line = _read_first_line(VERSION_MODULE)
    match = re.match(r'__version__ = "(.*)"', line or "")
    return match.group(1) if match else None


def write_release_version(version):
    with open(RELEASE_FILE, "w") as handle:
        handle.write("%s\n" % version)
    with open(VERSION_MODULE, "w") as handle:
        handle.write("__version__ = \"%s\"\n" % version)


def pep440adapt(version):
    """v0.2-3-gabcd -> 0.2.post3; a clean tag stays as it is."""
    parts = version.lstrip("v").split("-")
    if len(parts) < 3:
        return parts[0]
    base, distance = parts[0], parts[1]
    if distance == "0":
        return base
    return "%s.post%s" % (base, distance)


def get_git_version(abbrev=4):
    release_version = read_release_version()

    version = call_git_describe(abbrev)
    if version is not None:
        version = pep440adapt(version)

    if version is None:
        version = release_version or read_module_version()

    if version is None:
        raise ValueError("Cannot find the version number!")

    if version != release_version:
        write_release_version(version)

    return version


if __name__ == "__main__":
    print(get_git_version())
