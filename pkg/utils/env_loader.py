"""
Environment loading for torsionlab processes.

@Time ： 2026-10-18
"""
import os
import sys

from dotenv import load_dotenv

# Flag to indicate whether environment variables have already been loaded
ENV_LOADED = False

PROJECT_ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))


def _platform_env_name():
    if sys.platform == "darwin":
        return ".env.darwin"
    if sys.platform.startswith("linux"):
        return ".env.linux"
    if sys.platform.startswith("win"):
        return ".env.windows"
    return None


def load_platform_specific_env():
    """
    Load env_config/.env.common, then the platform file, once per process.
    Values already present in the environment win over file values.
    """
    global ENV_LOADED

    if ENV_LOADED:
        return

    env_dir = os.path.join(PROJECT_ROOT, "env_config")
    common_file = os.path.join(env_dir, ".env.common")
    if os.path.exists(common_file):
        load_dotenv(common_file, override=False)

    platform_name = _platform_env_name()
    if platform_name is not None:
        platform_file = os.path.join(env_dir, platform_name)
        if os.path.exists(platform_file):
            load_dotenv(platform_file, override=False)

    ENV_LOADED = True
