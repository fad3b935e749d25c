"""
Core serializer helpers shared by the NCK document serializers.
"""


class PassFieldMixin:
    """Emit the declared ``passed`` field under the JSON key ``pass``."""

    def to_representation(self, instance):
        data = super().to_representation(instance)
        # "pass" is a keyword, so the field is declared as "passed"
        data['pass'] = data.pop('passed')
        return data
