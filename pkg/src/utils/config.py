"""
⚙️ Module de gestion de la configuration
"""

import os
import json
from pathlib import Path
from typing import Dict, Any
import logging

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

DEFAULT_LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def _env_bool(name: str, default: str) -> bool:
    return os.getenv(name, default).lower() in ("1", "true", "yes")


def _deep_merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = dict(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class ConfigManager:
    """Gestionnaire de configuration"""

    def __init__(self, config_file: str = "config/config.json"):
        load_dotenv()
        self.config_file = Path(config_file)
        self.config_data = self._load_config()

    def _load_config(self) -> Dict[str, Any]:
        """Charge le fichier JSON par-dessus les valeurs par défaut"""
        defaults = self._get_default_config()
        if self.config_file.exists():
            try:
                with open(self.config_file, 'r', encoding='utf-8') as f:
                    config = json.load(f)
                if not isinstance(config, dict):
                    raise ValueError("la racine doit être un objet JSON")

                # Remplacer les placeholders par les variables d'environnement
                config = self._replace_env_vars(config)
                return _deep_merge(defaults, config)

            except Exception as e:
                logger.warning(f"Erreur lecture config {self.config_file}: {e}")

        return defaults

    def _replace_env_vars(self, config: Dict[str, Any]) -> Dict[str, Any]:
        """Remplace les valeurs ${VAR} par les variables d'environnement"""
        for key, value in config.items():
            if isinstance(value, dict):
                config[key] = self._replace_env_vars(value)
            elif isinstance(value, str) and value.startswith('${') and value.endswith('}'):
                env_var = value[2:-1]
                config[key] = os.getenv(env_var, value)
        return config

    def _get_default_config(self) -> Dict[str, Any]:
        """Configuration par défaut depuis les variables d'environnement"""
        return {
            "logging": {
                "level": os.getenv("GHB_LOG_LEVEL", "INFO"),
                "log_file": os.getenv("GHB_LOG_FILE", ""),
                "format": DEFAULT_LOG_FORMAT,
            },
            "verification": {
                "max_N": int(os.getenv("GHB_VERIFY_MAX_N", "3")),
                "max_n": int(os.getenv("GHB_VERIFY_MAX_INDEX", "10")),
                "max_f": int(os.getenv("GHB_VERIFY_MAX_MODULUS", "8")),
                "workers": int(os.getenv("GHB_WORKERS", "4")),
            },
            "output": {
                "format": os.getenv("GHB_OUTPUT_FORMAT", "json"),
                "decimal": _env_bool("GHB_OUTPUT_DECIMAL", "false"),
                "decimal_digits": 12,
            },
        }

    def get_logging_config(self) -> Dict[str, Any]:
        """Récupère la configuration logging"""
        return self.config_data.get("logging", {})

    def get_verification_config(self) -> Dict[str, Any]:
        """Récupère les bornes de vérification"""
        return self.config_data.get("verification", {})

    def get_output_config(self) -> Dict[str, Any]:
        """Récupère la configuration de sortie"""
        return self.config_data.get("output", {})
